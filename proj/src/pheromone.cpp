#include "acluster/pheromone.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "acluster/kernels.hpp"

namespace acluster {

Heading::Heading(int direction) : dir_(direction) {
  if (direction < 0 || direction > 7)
    throw ConfigError("heading must be in 0..7, got " + std::to_string(direction));
}

void DirectionWeights::validate() const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(w[i] > 0.0)) throw ConfigError("direction weights must be positive");
    if (i > 0 && w[i] > w[i - 1])
      throw ConfigError("direction weights must be non-increasing in turn size");
  }
}

double weight_pheromone(double sigma, double beta, double gamma) {
  return std::pow(1.0 + sigma / (1.0 + gamma * sigma), beta);
}

int delta_index(Heading from, int to_direction) {
  const int diff = std::abs(from.direction() - to_direction) % 8;
  return diff > 4 ? 8 - diff : diff;
}

MoveDistribution transition_probabilities(const Grid& grid, Coord agent_pos, Heading heading,
                                          const SimConfig& cfg,
                                          const DirectionWeights& weights) {
  std::array<double, 8> score{};
  double total = 0.0;
  for (int dir = 0; dir < 8; ++dir) {
    const Coord next = grid.step(agent_pos, dir);
    if (grid.agent_at(next)) continue;
    score[dir] = weight_pheromone(grid.pheromone_at(next), cfg.beta, cfg.gamma) *
                 weights.w[static_cast<std::size_t>(delta_index(heading, dir))];
    total += score[dir];
  }
  if (total <= 0.0) return std::nullopt;
  for (double& s : score) s /= total;
  return score;
}

double deposit(Grid& grid, Coord pos, int n_items, const SimConfig& cfg) {
  grid.add_pheromone(pos, deposit_amount(n_items, cfg));
  return grid.pheromone_at(pos);
}

void evaporate(Grid& grid, double k_evap) {
  if (k_evap == 0.0) return;
  kernels::evaporate_parallel(grid.pheromone(), k_evap);
}

}  // namespace acluster
