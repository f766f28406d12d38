#include "acluster/engine.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "acluster/behavior.hpp"

namespace acluster {

SimState::SimState(const SimConfig& cfg, const Dataset& data)
    : cfg_(cfg), data_(&data), rng_(cfg.seed) {
  cfg_.validate();
  grid_ = place_items_randomly(data, cfg_.grid_side, rng_);
  agents_.reserve(static_cast<std::size_t>(cfg_.n_agents));
  for (int i = 0; i < cfg_.n_agents; ++i) {
    Coord pos;
    do {
      pos = grid_.coord(uniform_below(rng_, grid_.cell_count()));
    } while (grid_.agent_at(pos));
    const auto id = static_cast<AgentId>(i);
    grid_.put_agent(pos, id);
    agents_.push_back(Agent{id, pos, Heading{}, std::nullopt,
                            i % 2 == 0 ? SubAssignment::A : SubAssignment::B});
  }
  for (Agent& a : agents_) a.heading = Heading(static_cast<int>(uniform_below(rng_, 8)));
}

SimState::SimState(const SimConfig& cfg, const Dataset& data, Grid grid,
                   std::vector<Agent> agents, Rng rng, std::int64_t t)
    : cfg_(cfg), data_(&data), grid_(std::move(grid)), agents_(std::move(agents)),
      rng_(rng), t_(t) {
  for (std::size_t i = 0; i < agents_.size(); ++i)
    if (agents_[i].id != i) throw ConfigError("agent ids must be 0..n-1 in order");
}

std::size_t SimState::carried_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      agents_.begin(), agents_.end(), [](const Agent& a) { return a.carried.has_value(); }));
}

std::vector<CarriedItem> SimState::carried_items() const {
  std::vector<CarriedItem> out;
  for (const Agent& a : agents_)
    if (a.carried) out.push_back({a.pos, *a.carried});
  return out;
}

bool SimState::same_layout(const SimState& other) const {
  return t_ == other.t_ && grid_ == other.grid_ && agents_ == other.agents_;
}

namespace {

enum class Action { Pick, Drop };

// Votes over occupied neighbours of `pos` for `item` and reports whether
// 2*sum >= n. For type 4 a single Lumer-Faieta draw decides instead.
bool vote(SimState& s, const Agent& agent, ItemId item, Action action) {
  const SimConfig& cfg = s.config();
  const Grid& grid = s.grid();
  const Dataset& data = s.dataset();
  Rng& rng = s.rng();

  if (cfg.function_type == FunctionType::Type4) {
    const double f = lf_local_density(grid, agent.pos, item, data, cfg.lf_s, cfg.lf_alpha);
    const PickDrop p = lf_probabilities(f, cfg.k1, cfg.k2);
    return uniform01(rng) < (action == Action::Pick ? p.pick : p.drop);
  }

  const int n = grid.count_items_around(agent.pos);
  if (n == 0) return action == Action::Pick;
  const double chi_val = chi(n, cfg.theta_count, cfg.steepness);
  int sum = 0;
  for (int dir = 0; dir < 8; ++dir) {
    const auto other = grid.item_at(grid.step(agent.pos, dir));
    if (!other) continue;
    const double d = data.distance(item, *other);
    double p;
    if (action == Action::Pick) {
      p = compose_probabilities(cfg.function_type, agent.sub, chi_val, epsilon_pick(d, cfg.k2), 0.0)
              .pick;
    } else {
      p = compose_probabilities(cfg.function_type, agent.sub, chi_val, 0.0, delta_drop(d, cfg.k1))
              .drop;
    }
    if (uniform01(rng) < p) ++sum;
  }
  return 2 * sum >= n;
}

Coord nearest_empty_cell(const Grid& grid, Coord from) {
  const int side = grid.side();
  for (int r = 0; r <= side / 2; ++r)
    for (int dy = -r; dy <= r; ++dy)
      for (int dx = -r; dx <= r; ++dx) {
        if (std::max(std::abs(dx), std::abs(dy)) != r) continue;
        const Coord c = grid.wrap(from.x + dx, from.y + dy);
        if (!grid.item_at(c)) return c;
      }
  throw CapacityError("no empty cell left for a carried item");
}

}  // namespace

bool try_pick(SimState& state, AgentId id) {
  Agent& agent = state.agents().at(id);
  const auto item = state.grid().item_at(agent.pos);
  if (agent.carried || !item) return false;
  if (!vote(state, agent, *item, Action::Pick)) return false;
  agent.carried = state.grid().take_item(agent.pos);
  return true;
}

bool try_drop(SimState& state, AgentId id) {
  Agent& agent = state.agents().at(id);
  if (!agent.carried || state.grid().item_at(agent.pos)) return false;
  if (state.config().function_type != FunctionType::Type4 &&
      state.grid().count_items_around(agent.pos) == 0)
    return false;
  if (!vote(state, agent, *agent.carried, Action::Drop)) return false;
  state.grid().put_item(agent.pos, *agent.carried);
  agent.carried.reset();
  return true;
}

void step(SimState& state, StepMode mode) {
  const SimConfig& cfg = state.config();
  Grid& grid = state.grid();
  auto& agents = state.agents();

  std::vector<AgentId> order(agents.size());
  std::iota(order.begin(), order.end(), AgentId{0});
  if (cfg.random_order) std::shuffle(order.begin(), order.end(), state.rng());

  for (AgentId id : order) {
    {
      const Agent& a = agents[id];
      const bool on_item = grid.item_at(a.pos).has_value();
      if (!a.carried && on_item) {
        if (mode == StepMode::Normal) try_pick(state, id);
      } else if (a.carried && !on_item) {
        try_drop(state, id);
      }
    }

    Agent& a = agents[id];
    const auto probs = transition_probabilities(grid, a.pos, a.heading, cfg, state.weights());
    if (probs) {
      const double u = uniform01(state.rng());
      int chosen = -1;
      double cum = 0.0;
      for (int dir = 0; dir < 8; ++dir) {
        if ((*probs)[dir] <= 0.0) continue;
        chosen = dir;
        cum += (*probs)[dir];
        if (u < cum) break;
      }
      const Coord dest = grid.step(a.pos, chosen);
      grid.move_agent(a.pos, dest);
      a.pos = dest;
      a.heading = Heading(chosen);
    }
    deposit(grid, a.pos, grid.count_items_around(a.pos), cfg);
  }

  evaporate(grid, cfg.k_evap);
  state.advance_clock();
}

void check_invariants(const SimState& state) {
  const Grid& grid = state.grid();
  const std::size_t n = state.dataset().size();
  std::vector<int> seen(n, 0);
  for (const auto& slot : grid.items())
    if (slot) {
      if (*slot >= n) throw InvariantError("unknown item id on grid");
      ++seen[*slot];
    }
  for (const Agent& a : state.agents()) {
    if (!grid.contains(a.pos)) throw InvariantError("agent outside grid");
    const auto occupant = grid.agent_at(a.pos);
    if (!occupant || *occupant != a.id)
      throw InvariantError("agent " + std::to_string(a.id) + " not registered at its cell");
    if (a.carried) {
      if (*a.carried >= n) throw InvariantError("agent carries unknown item");
      ++seen[*a.carried];
    }
  }
  std::size_t agent_slots = 0;
  for (const auto& slot : grid.agents())
    if (slot) ++agent_slots;
  if (agent_slots != state.agents().size())
    throw InvariantError("agent slots on grid do not match agent list");
  for (std::size_t i = 0; i < n; ++i)
    if (seen[i] != 1)
      throw InvariantError("item " + std::to_string(i) + " present " + std::to_string(seen[i]) +
                           " times");
  for (double v : grid.pheromone())
    if (!(v >= 0.0)) throw InvariantError("negative pheromone");
}

EntropyRecord measure_entropy(const SimState& state, CarriedPolicy policy) {
  const auto carried = policy == CarriedPolicy::AtCarrier ? state.carried_items()
                                                          : std::vector<CarriedItem>{};
  const auto map = label_map(state.grid(), state.dataset(), carried);
  return entropy_from_label_map(map, state.grid().side(), state.dataset(), state.t());
}

void finish_run(SimState& state, std::int64_t& drain_steps, std::size_t& forced) {
  drain_steps = 0;
  forced = 0;
  while (state.carried_count() > 0 && drain_steps < state.config().drain_cap) {
    step(state, StepMode::Drain);
    ++drain_steps;
  }
  for (Agent& a : state.agents()) {
    if (!a.carried) continue;
    state.grid().put_item(nearest_empty_cell(state.grid(), a.pos), *a.carried);
    a.carried.reset();
    ++forced;
  }
}

RunResult run(const SimConfig& cfg, const Dataset& data, const RunOptions& opts) {
  cfg.validate();
  RunResult result{SimState(cfg, data), {}, {}, 0, 0};
  SimState& state = result.state;

  auto observe = [&](std::int64_t t) {
    const bool last = t == cfg.t_max;
    if (opts.entropy_every > 0 && (t % opts.entropy_every == 0 || last))
      result.entropy.push_back(measure_entropy(state, opts.carried));
    for (const Observer& o : opts.observers)
      if (o.every > 0 && (t % o.every == 0 || last)) o.fn(t, state);
  };

  observe(0);
  while (state.t() < cfg.t_max) {
    step(state);
    observe(state.t());
  }
  finish_run(state, result.drain_steps, result.forced_placements);
  result.final_entropy = measure_entropy(state, CarriedPolicy::Exclude);
  return result;
}

}  // namespace acluster
