#include "acluster/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace acluster::kernels {

namespace {

double row_distance(const double* a, const double* b, std::size_t dim) {
  double acc = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    const double diff = a[k] - b[k];
    acc += diff * diff;
  }
  return std::sqrt(acc / static_cast<double>(dim));
}

std::int64_t foreign_neighbours(std::span<const std::int32_t> labels, int side, int x,
                                int y) {
  const std::int32_t own = labels[static_cast<std::size_t>(y) * side + x];
  std::int64_t e = 0;
  for (int dy = -1; dy <= 1; ++dy) {
    const int ny = (y + dy + side) % side;
    for (int dx = -1; dx <= 1; ++dx) {
      if (dx == 0 && dy == 0) continue;
      const int nx = (x + dx + side) % side;
      if (labels[static_cast<std::size_t>(ny) * side + nx] != own) ++e;
    }
  }
  return e;
}

}  // namespace

double max_pairwise_rms_serial(std::span<const double> rows, std::size_t dim) {
  if (dim == 0) return 0.0;
  const std::size_t n = rows.size() / dim;
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      best = std::max(best, row_distance(&rows[i * dim], &rows[j * dim], dim));
  return best;
}

double max_pairwise_rms_parallel(std::span<const double> rows, std::size_t dim) {
  if (dim == 0) return 0.0;
  const auto n = static_cast<std::int64_t>(rows.size() / dim);
  if (n <= 256) return max_pairwise_rms_serial(rows, dim);
  const double* base = rows.data();
  double best = 0.0;
  // max is exact, so the reduction matches the serial scan bit for bit.
#pragma omp parallel for schedule(dynamic, 16) reduction(max : best)
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = i + 1; j < n; ++j)
      best = std::max(best, row_distance(base + i * dim, base + j * dim, dim));
  return best;
}

void evaporate_serial(std::span<double> field, double rate) {
  const double keep = 1.0 - rate;
  for (double& v : field) v *= keep;
}

void evaporate_parallel(std::span<double> field, double rate) {
  // Even a disabled parallel region costs more than a small sweep.
  if (field.size() < kParallelCellThreshold) return evaporate_serial(field, rate);
  const double keep = 1.0 - rate;
  const auto n = static_cast<std::int64_t>(field.size());
  double* data = field.data();
#pragma omp parallel for simd schedule(static)
  for (std::int64_t i = 0; i < n; ++i) data[i] *= keep;
}

ClassCounts entropy_counts_serial(std::span<const std::int32_t> labels, int side,
                                  int n_classes) {
  ClassCounts out{std::vector<std::int64_t>(n_classes, 0),
                  std::vector<std::int64_t>(n_classes, 0)};
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x) {
      const std::int32_t c = labels[static_cast<std::size_t>(y) * side + x];
      if (c < 0) continue;
      out.members[c] += 1;
      out.foreign[c] += foreign_neighbours(labels, side, x, y);
    }
  return out;
}

ClassCounts entropy_counts_parallel(std::span<const std::int32_t> labels, int side,
                                    int n_classes) {
  const std::size_t cells = static_cast<std::size_t>(side) * side;
  if (cells < kParallelCellThreshold) return entropy_counts_serial(labels, side, n_classes);
  ClassCounts out{std::vector<std::int64_t>(n_classes, 0),
                  std::vector<std::int64_t>(n_classes, 0)};
  std::int64_t* foreign = out.foreign.data();
  std::int64_t* members = out.members.data();
  // Integer sums are associative, so the array reduction is exact.
#pragma omp parallel for schedule(static) reduction(+ : foreign[:n_classes], members[:n_classes])
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x) {
      const std::int32_t c = labels[static_cast<std::size_t>(y) * side + x];
      if (c < 0) continue;
      members[c] += 1;
      foreign[c] += foreign_neighbours(labels, side, x, y);
    }
  return out;
}

}  // namespace acluster::kernels
