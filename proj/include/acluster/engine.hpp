#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "acluster/config.hpp"
#include "acluster/core.hpp"
#include "acluster/grid.hpp"
#include "acluster/metrics.hpp"
#include "acluster/pheromone.hpp"
#include "acluster/rng.hpp"

namespace acluster {

struct Agent {
  AgentId id = 0;
  Coord pos;
  Heading heading;
  std::optional<ItemId> carried;
  SubAssignment sub = SubAssignment::A;

  friend bool operator==(const Agent&, const Agent&) = default;
};

/// Everything that evolves during a run. The dataset is borrowed and must
/// outlive the state.
class SimState {
 public:
  /// Random initial layout from cfg.seed: items first (id order), then
  /// agents on agent-free cells, then headings. Agents with even id use
  /// sub-assignment A, odd id B.
  SimState(const SimConfig& cfg, const Dataset& data);

  /// Explicit layout. Agents must already be registered on the grid.
  SimState(const SimConfig& cfg, const Dataset& data, Grid grid, std::vector<Agent> agents,
           Rng rng, std::int64_t t = 0);

  [[nodiscard]] const SimConfig& config() const noexcept { return cfg_; }
  [[nodiscard]] const Dataset& dataset() const noexcept { return *data_; }
  [[nodiscard]] const Grid& grid() const noexcept { return grid_; }
  [[nodiscard]] Grid& grid() noexcept { return grid_; }
  [[nodiscard]] const std::vector<Agent>& agents() const noexcept { return agents_; }
  [[nodiscard]] std::vector<Agent>& agents() noexcept { return agents_; }
  [[nodiscard]] std::int64_t t() const noexcept { return t_; }
  [[nodiscard]] Rng& rng() noexcept { return rng_; }
  [[nodiscard]] const DirectionWeights& weights() const noexcept { return weights_; }

  [[nodiscard]] std::size_t carried_count() const noexcept;
  [[nodiscard]] std::vector<CarriedItem> carried_items() const;

  void advance_clock() noexcept { ++t_; }

  /// Grid-only equality plus agents and clock; the rng is not compared.
  [[nodiscard]] bool same_layout(const SimState& other) const;

 private:
  SimConfig cfg_;
  const Dataset* data_;
  Grid grid_;
  std::vector<Agent> agents_;
  Rng rng_;
  std::int64_t t_ = 0;
  DirectionWeights weights_;
};

/// Unladen agent standing on an item votes over its occupied neighbours and
/// picks the item up when at least half the votes pass (or no neighbour is
/// occupied). Returns false without drawing when the precondition fails.
bool try_pick(SimState& state, AgentId agent);

/// Laden agent on an item-free cell votes the same way; it never drops with
/// zero occupied neighbours.
bool try_drop(SimState& state, AgentId agent);

enum class StepMode { Normal, Drain };

/// One global time step: every agent acts, moves and deposits; then the
/// whole field evaporates once. Drain mode disables picking.
void step(SimState& state, StepMode mode = StepMode::Normal);

/// Throws InvariantError on item loss or duplication, agent overlap, a
/// stale agent slot, or negative pheromone.
void check_invariants(const SimState& state);

/// Entropy of the current layout; carried items per `policy`.
EntropyRecord measure_entropy(const SimState& state, CarriedPolicy policy = CarriedPolicy::Exclude);

struct Observer {
  std::int64_t every = 1;
  std::function<void(std::int64_t, const SimState&)> fn;
};

struct RunOptions {
  /// Entropy sampling interval; 0 disables the series.
  std::int64_t entropy_every = 1000;
  CarriedPolicy carried = CarriedPolicy::Exclude;
  /// Fire at t = 0, at every multiple of their interval, and at t_max.
  std::vector<Observer> observers;
};

struct RunResult {
  SimState state;
  std::vector<EntropyRecord> entropy;
  EntropyRecord final_entropy;  // after drain, every item resident
  std::int64_t drain_steps = 0;
  std::size_t forced_placements = 0;
};

/// Initializes from the seed, runs t_max steps, drains laden agents for up to
/// drain_cap steps, then places any item still carried on the nearest empty
/// cell (Chebyshev rings around the carrier, row-major within a ring).
RunResult run(const SimConfig& cfg, const Dataset& data, const RunOptions& opts = {});

/// Drain and forced placement only; used by run() and by tests that build
/// their own state.
void finish_run(SimState& state, std::int64_t& drain_steps, std::size_t& forced);

}  // namespace acluster
