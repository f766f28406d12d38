#pragma once

// Data-parallel kernels. Every OpenMP kernel has a serial twin kept as the
// reference for tests and benchmarks; both must produce identical results.

#include <cstdint>
#include <span>
#include <vector>

namespace acluster::kernels {

/// Largest RMS distance over all unordered pairs of rows in a row-major
/// n x dim matrix. Returns 0 for fewer than two rows.
double max_pairwise_rms_serial(std::span<const double> rows, std::size_t dim);
double max_pairwise_rms_parallel(std::span<const double> rows, std::size_t dim);

/// field[i] *= (1 - rate) for every cell.
void evaporate_serial(std::span<double> field, double rate);
void evaporate_parallel(std::span<double> field, double rate);

/// Label map of a side x side torus: -1 for empty, else a class index in
/// [0, n_classes). For each class returns (sum of non-same Moore neighbours
/// over its items, item count).
struct ClassCounts {
  std::vector<std::int64_t> foreign;
  std::vector<std::int64_t> members;
};
ClassCounts entropy_counts_serial(std::span<const std::int32_t> labels, int side,
                                  int n_classes);
ClassCounts entropy_counts_parallel(std::span<const std::int32_t> labels, int side,
                                    int n_classes);

/// Below this many cells the parallel kernels run serially; OpenMP fork/join
/// costs more than a sweep over a small grid.
inline constexpr std::size_t kParallelCellThreshold = 1 << 16;

}  // namespace acluster::kernels
