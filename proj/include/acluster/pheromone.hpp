#pragma once

#include <array>
#include <optional>

#include "acluster/config.hpp"
#include "acluster/grid.hpp"

namespace acluster {

/// Discrete orientation, one of the 8 compass directions (see kHeadingOffsets).
class Heading {
 public:
  constexpr Heading() = default;
  explicit Heading(int direction);
  [[nodiscard]] constexpr int direction() const noexcept { return dir_; }
  friend constexpr bool operator==(Heading, Heading) = default;

 private:
  int dir_ = 0;
};

/// Turn penalties indexed by the size of the heading change (0 = straight
/// ahead, 4 = U-turn). Defaults are 1, 1/2, 1/4, 1/12, 1/20.
struct DirectionWeights {
  std::array<double, 5> w{1.0, 1.0 / 2.0, 1.0 / 4.0, 1.0 / 12.0, 1.0 / 20.0};

  /// Throws ConfigError unless strictly positive and non-increasing.
  void validate() const;
};

/// Osmotropotactic response (1 + sigma / (1 + gamma*sigma))^beta.
double weight_pheromone(double sigma, double beta, double gamma);

/// Circular distance between two compass directions, in 0..4.
int delta_index(Heading from, int to_direction);

/// nullopt means every neighbour holds another agent; the agent stays put.
using MoveDistribution = std::optional<std::array<double, 8>>;

/// Normalized probabilities of stepping to each neighbour (heading order).
/// Cells occupied by another agent get probability 0.
MoveDistribution transition_probabilities(const Grid& grid, Coord agent_pos, Heading heading,
                                          const SimConfig& cfg,
                                          const DirectionWeights& weights = {});

/// Amount laid by one agent on a cell with n_items neighbouring items.
inline double deposit_amount(int n_items, const SimConfig& cfg) noexcept {
  return cfg.eta + cfg.p_dep * n_items;
}

/// Adds eta + p_dep * n_items at pos; returns the new level.
double deposit(Grid& grid, Coord pos, int n_items, const SimConfig& cfg);

/// Multiplicative decay sigma <- sigma * (1 - k_evap) over every cell.
void evaporate(Grid& grid, double k_evap);

}  // namespace acluster
