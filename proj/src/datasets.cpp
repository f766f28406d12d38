#include "acluster/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace acluster {

GaussianSpec::GaussianSpec(std::vector<GaussianCluster> clusters) : clusters_(std::move(clusters)) {
  if (clusters_.empty()) throw ConfigError("gaussian spec needs at least one cluster");
  for (const auto& c : clusters_) {
    if (c.count <= 0) throw ConfigError("cluster '" + c.label + "' must have a positive count");
    if (!(c.stddev > 0.0) || !std::isfinite(c.stddev))
      throw ConfigError("cluster '" + c.label + "' must have a positive stddev");
    if (!std::isfinite(c.mean_x) || !std::isfinite(c.mean_y))
      throw ConfigError("cluster '" + c.label + "' has a non-finite mean");
  }
}

GaussianSpec GaussianSpec::benchmark_default() {
  return GaussianSpec({{"A", 0.2, 0.2, 0.1, 200},
                       {"B", 0.8, 0.2, 0.1, 200},
                       {"C", 0.8, 0.8, 0.1, 200},
                       {"D", 0.2, 0.8, 0.1, 200}});
}

Dataset generate_gaussian(const GaussianSpec& spec, Rng& rng) {
  std::vector<Item> items;
  for (const auto& c : spec.clusters()) {
    std::normal_distribution<double> nx(c.mean_x, c.stddev);
    std::normal_distribution<double> ny(c.mean_y, c.stddev);
    for (int i = 0; i < c.count; ++i) {
      Item it;
      it.id = static_cast<ItemId>(items.size());
      const double x = nx(rng);
      const double y = ny(rng);
      it.features = {x, y};
      it.label = c.label;
      items.push_back(std::move(it));
    }
  }
  return Dataset(std::move(items));
}

Dataset generate_blobs(int n_items, int n_clusters, int dim, double stddev, Rng& rng) {
  if (n_items <= 0 || n_clusters <= 0 || dim <= 0 || !(stddev > 0.0))
    throw ConfigError("blob generator needs positive item count, clusters, dim and stddev");
  std::vector<std::vector<double>> centres(static_cast<std::size_t>(n_clusters));
  for (auto& c : centres) {
    c.resize(static_cast<std::size_t>(dim));
    for (double& v : c) v = uniform01(rng);
  }
  std::normal_distribution<double> noise(0.0, stddev);
  std::vector<Item> items;
  items.reserve(static_cast<std::size_t>(n_items));
  for (int i = 0; i < n_items; ++i) {
    const auto k = static_cast<std::size_t>(i % n_clusters);
    Item it;
    it.id = static_cast<ItemId>(i);
    it.features = centres[k];
    for (double& v : it.features) v += noise(rng);
    it.label = "c" + std::to_string(k);
    items.push_back(std::move(it));
  }
  return Dataset(std::move(items));
}

ExperimentSize size_experiment(int n_items) {
  if (n_items < 1) throw ConfigError("size_experiment needs at least one item");
  const int side = std::max(3, static_cast<int>(std::lround(std::sqrt(4.0 * n_items))));
  const int agents =
      std::max(1, static_cast<int>(std::lround(static_cast<double>(side) * side / 40.0)));
  return {side, agents};
}

}  // namespace acluster
