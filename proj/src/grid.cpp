#include "acluster/grid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace acluster {

Grid::Grid(int side) : side_(side) {
  if (side < 3) throw ConfigError("grid side must be at least 3, got " + std::to_string(side));
  const auto n = static_cast<std::size_t>(side) * side;
  pheromone_.assign(n, 0.0);
  items_.assign(n, std::nullopt);
  agents_.assign(n, std::nullopt);
}

Coord Grid::wrap(int x, int y) const noexcept {
  x %= side_;
  y %= side_;
  if (x < 0) x += side_;
  if (y < 0) y += side_;
  return {x, y};
}

Coord Grid::step(Coord c, int dir) const noexcept {
  const Coord d = kHeadingOffsets[static_cast<std::size_t>(dir)];
  return wrap(c.x + d.x, c.y + d.y);
}

std::array<Coord, 8> Grid::neighbors8(Coord c) const noexcept {
  std::array<Coord, 8> out;
  for (int dir = 0; dir < 8; ++dir) out[dir] = step(c, dir);
  return out;
}

int Grid::count_items_around(Coord c) const noexcept {
  int n = 0;
  for (int dir = 0; dir < 8; ++dir)
    if (items_[index(step(c, dir))]) ++n;
  return n;
}

Cell Grid::cell(Coord c) const {
  const auto i = index(c);
  return Cell{pheromone_[i], items_[i], agents_[i]};
}

void Grid::put_item(Coord c, ItemId id) {
  auto& slot = items_[index(c)];
  if (slot) throw InvariantError("cell already holds an item");
  slot = id;
}

ItemId Grid::take_item(Coord c) {
  auto& slot = items_[index(c)];
  if (!slot) throw InvariantError("no item to take");
  const ItemId id = *slot;
  slot.reset();
  return id;
}

void Grid::put_agent(Coord c, AgentId id) {
  auto& slot = agents_[index(c)];
  if (slot) throw InvariantError("cell already holds an agent");
  slot = id;
}

void Grid::remove_agent(Coord c) { agents_[index(c)].reset(); }

void Grid::move_agent(Coord from, Coord to) {
  if (from == to) return;
  auto& src = agents_[index(from)];
  auto& dst = agents_[index(to)];
  if (!src) throw InvariantError("no agent to move");
  if (dst) throw InvariantError("destination holds another agent");
  dst = src;
  src.reset();
}

void Grid::set_pheromone(Coord c, double v) {
  if (!(v >= 0.0)) throw InvariantError("pheromone must be non-negative");
  pheromone_[index(c)] = v;
}

std::size_t Grid::resident_item_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(items_.begin(), items_.end(), [](const auto& s) { return s.has_value(); }));
}

Grid place_items_randomly(const Dataset& data, int side, Rng& rng) {
  Grid grid(side);
  if (data.size() > grid.cell_count())
    throw CapacityError(std::to_string(data.size()) + " items do not fit on " +
                        std::to_string(grid.cell_count()) + " cells");
  std::vector<std::size_t> free(grid.cell_count());
  std::iota(free.begin(), free.end(), std::size_t{0});
  for (const Item& it : data.items()) {
    const auto k = uniform_below(rng, free.size());
    grid.put_item(grid.coord(free[k]), it.id);
    free[k] = free.back();
    free.pop_back();
  }
  return grid;
}

}  // namespace acluster
