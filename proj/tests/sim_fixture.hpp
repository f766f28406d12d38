#pragma once

// Hand-built simulation states for engine tests.

#include <sstream>
#include <utility>
#include <vector>

#include "acluster/engine.hpp"

namespace fixture {

using namespace acluster;

/// One-feature dataset from the given values; d_max is max - min.
inline Dataset values(const std::vector<double>& xs) {
  std::ostringstream text;
  text.precision(17);
  for (double x : xs) text << x << '\n';
  std::istringstream in(text.str());
  return load_dataset(in);
}

struct Layout {
  int side = 9;
  std::vector<std::pair<Coord, ItemId>> items;
  std::vector<Coord> agents;  // agent i at agents[i]
  std::vector<int> headings;  // defaults to 0
};

inline SimState make_state(const SimConfig& cfg, const Dataset& data, const Layout& layout,
                           std::uint64_t seed = 1) {
  Grid grid(layout.side);
  for (const auto& [c, id] : layout.items) grid.put_item(c, id);
  std::vector<Agent> agents;
  for (std::size_t i = 0; i < layout.agents.size(); ++i) {
    const auto id = static_cast<AgentId>(i);
    grid.put_agent(layout.agents[i], id);
    const int h = i < layout.headings.size() ? layout.headings[i] : 0;
    agents.push_back(Agent{id, layout.agents[i], Heading(h), std::nullopt,
                           i % 2 == 0 ? SubAssignment::A : SubAssignment::B});
  }
  return SimState(cfg, data, std::move(grid), std::move(agents), Rng(seed));
}

}  // namespace fixture
