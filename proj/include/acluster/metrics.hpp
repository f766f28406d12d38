#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "acluster/core.hpp"
#include "acluster/grid.hpp"

namespace acluster {

/// Per-class spatial entropy at one time step. Unlabeled datasets report a
/// single class named "all".
struct EntropyRecord {
  std::int64_t t = 0;
  std::map<std::string, double> per_class;
  double total = 0.0;
};

struct CarriedItem {
  Coord pos;
  ItemId item = 0;
};

/// Cell-by-cell class index (-1 = no item). Carried items, when given, are
/// overlaid on their carrier's cell if that cell has no resident item.
std::vector<std::int32_t> label_map(const Grid& grid, const Dataset& data,
                                    std::span<const CarriedItem> carried = {});

/// Fraction of Moore-neighbour slots around items of `label` that are empty
/// or hold another class: sum(e_i) / (8 n). Throws UndefinedLabelError when
/// no resident item carries the label.
double class_entropy(const Grid& grid, const Dataset& data, const std::string& label);

/// Sum of class_entropy over every label with at least one resident item.
EntropyRecord total_entropy(const Grid& grid, const Dataset& data, std::int64_t t = 0);
EntropyRecord entropy_from_label_map(std::span<const std::int32_t> labels, int side,
                                     const Dataset& data, std::int64_t t = 0);

struct Cluster {
  std::vector<ItemId> members;  // ascending
  std::string majority_label;
  double purity = 1.0;
  std::size_t size = 0;
};

struct ClusterReport {
  std::vector<Cluster> clusters;  // ordered by first member's row-major cell
  std::size_t n_clusters = 0;
};

enum class Connectivity { Four = 4, Eight = 8 };

/// Connected components of resident items on the torus. Purity is the share
/// of the most frequent label (ties go to the lexicographically smaller one).
ClusterReport extract_clusters(const Grid& grid, const Dataset& data,
                               Connectivity conn = Connectivity::Eight);

/// Unweighted mean purity over clusters with size >= min_size; NaN when no
/// cluster qualifies.
double mean_purity(const ClusterReport& report, std::size_t min_size);

}  // namespace acluster
