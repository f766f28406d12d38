#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "acluster/engine.hpp"
#include "acluster/metrics.hpp"

namespace acluster {

using Rgb = std::array<std::uint8_t, 3>;

inline constexpr Rgb kEmptyColor{255, 255, 255};
inline constexpr Rgb kAgentColor{0, 0, 0};

/// Colour for class index c. The first ten are a fixed palette; later ones
/// come from an odd-multiplier scramble of the index over 24-bit colours.
Rgb class_color(std::size_t c);

/// Plain (P3) pixmap, one pixel per cell: agents over items over empty.
/// Carried items are not drawn.
void write_ppm(std::ostream& out, const SimState& state);

/// Vector snapshot with one glyph per item (circle, triangle, disc, cross
/// for the first four classes) and small squares for agents.
void write_svg(std::ostream& out, const SimState& state, int cell_px = 10);

/// Header "t,E_<label>...,E_total"; one row per record. Labels are the
/// dataset's sorted labels (or "all"); a class absent at some step is
/// written as an empty field.
void write_entropy_csv(std::ostream& out, const std::vector<EntropyRecord>& series,
                       const Dataset& data);

struct EntropySeries {
  std::vector<std::string> columns;  // header without "t"
  std::vector<std::int64_t> t;
  std::vector<double> total;
};

/// Reads the file write_entropy_csv produces. Only t and E_total are kept.
EntropySeries read_entropy_csv(std::istream& in);

/// Listing with one "(A) m1, m2, ... ." line per cluster, preceded by a
/// "#" line with size, majority label and purity. Members are printed by
/// label when every item has a distinct label, by id otherwise.
void write_cluster_listing(std::ostream& out, const ClusterReport& report, const Dataset& data,
                           std::size_t purity_min_size = 10);

/// A, B, ..., Z, AA, AB, ...
std::string cluster_tag(std::size_t index);

/// FNV-1a over the raw bytes; rendered as 16 lowercase hex digits.
std::string content_digest(std::istream& in);
std::string content_digest_file(const std::string& path);

/// Shortest round-trip decimal form.
std::string format_real(double v);

}  // namespace acluster
