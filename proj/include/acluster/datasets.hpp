#pragma once

#include <string>
#include <vector>

#include "acluster/core.hpp"
#include "acluster/rng.hpp"

namespace acluster {

struct GaussianCluster {
  std::string label;
  double mean_x = 0.0;
  double mean_y = 0.0;
  double stddev = 0.1;
  int count = 0;
};

/// Isotropic 2-D Gaussian clusters. Construction rejects count <= 0 or
/// stddev <= 0.
class GaussianSpec {
 public:
  explicit GaussianSpec(std::vector<GaussianCluster> clusters);

  /// Four classes A-D of 200 points, sd 0.1, centred on the corners of
  /// [0.2, 0.8]^2.
  static GaussianSpec benchmark_default();

  [[nodiscard]] const std::vector<GaussianCluster>& clusters() const noexcept { return clusters_; }

 private:
  std::vector<GaussianCluster> clusters_;
};

/// Samples each cluster in order, x then y per point. Values are not clipped.
Dataset generate_gaussian(const GaussianSpec& spec, Rng& rng);

/// Higher-dimensional stand-in for precomputed document vectors: `n_items`
/// points split round-robin over `n_clusters` centres drawn uniformly in
/// [0,1]^dim, each point perturbed by N(0, stddev) per coordinate. Labels
/// are "c0", "c1", ...
Dataset generate_blobs(int n_items, int n_clusters, int dim, double stddev, Rng& rng);

struct ExperimentSize {
  int grid_side = 3;
  int n_agents = 1;
};

/// Grid area about four times the item count, one agent per 40 cells.
/// side = max(3, round(sqrt(4 n))), agents = max(1, round(side^2 / 40)).
ExperimentSize size_experiment(int n_items);

}  // namespace acluster
