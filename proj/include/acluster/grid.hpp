#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "acluster/core.hpp"
#include "acluster/rng.hpp"

namespace acluster {

using AgentId = std::uint32_t;

struct Coord {
  int x = 0;
  int y = 0;
  friend bool operator==(const Coord&, const Coord&) = default;
};

/// Compass offsets indexed by heading: 0 = north (y-1), clockwise through
/// 7 = north-west. Neighbour order everywhere follows this table.
inline constexpr std::array<Coord, 8> kHeadingOffsets{{
    {0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}}};

struct Cell {
  double pheromone = 0.0;
  std::optional<ItemId> item;
  std::optional<AgentId> agent;
};

/// Square toroidal lattice, side >= 3. Pheromone is stored in its own
/// contiguous array so the evaporation sweep stays a flat loop.
class Grid {
 public:
  Grid() = default;
  explicit Grid(int side);

  [[nodiscard]] int side() const noexcept { return side_; }
  [[nodiscard]] std::size_t cell_count() const noexcept { return pheromone_.size(); }

  [[nodiscard]] std::size_t index(Coord c) const noexcept {
    return static_cast<std::size_t>(c.y) * side_ + c.x;
  }
  [[nodiscard]] Coord coord(std::size_t idx) const noexcept {
    return {static_cast<int>(idx % side_), static_cast<int>(idx / side_)};
  }
  [[nodiscard]] Coord wrap(int x, int y) const noexcept;
  [[nodiscard]] bool contains(Coord c) const noexcept {
    return c.x >= 0 && c.y >= 0 && c.x < side_ && c.y < side_;
  }

  /// Neighbour reached by moving one step along heading dir (0..7).
  [[nodiscard]] Coord step(Coord c, int dir) const noexcept;

  /// Moore neighbours with wrap-around, ordered by heading index.
  [[nodiscard]] std::array<Coord, 8> neighbors8(Coord c) const noexcept;

  /// Occupied item slots among the 8 neighbours; the centre is excluded.
  [[nodiscard]] int count_items_around(Coord c) const noexcept;

  [[nodiscard]] Cell cell(Coord c) const;

  [[nodiscard]] std::optional<ItemId> item_at(Coord c) const noexcept { return items_[index(c)]; }
  [[nodiscard]] std::optional<AgentId> agent_at(Coord c) const noexcept { return agents_[index(c)]; }
  [[nodiscard]] double pheromone_at(Coord c) const noexcept { return pheromone_[index(c)]; }

  /// Throws InvariantError if the slot is already taken.
  void put_item(Coord c, ItemId id);
  ItemId take_item(Coord c);
  void put_agent(Coord c, AgentId id);
  void remove_agent(Coord c);
  void move_agent(Coord from, Coord to);
  void set_pheromone(Coord c, double v);
  void add_pheromone(Coord c, double v) noexcept { pheromone_[index(c)] += v; }

  [[nodiscard]] std::vector<double>& pheromone() noexcept { return pheromone_; }
  [[nodiscard]] const std::vector<double>& pheromone() const noexcept { return pheromone_; }
  [[nodiscard]] const std::vector<std::optional<ItemId>>& items() const noexcept { return items_; }
  [[nodiscard]] const std::vector<std::optional<AgentId>>& agents() const noexcept { return agents_; }

  [[nodiscard]] std::size_t resident_item_count() const noexcept;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int side_ = 0;
  std::vector<double> pheromone_;
  std::vector<std::optional<ItemId>> items_;
  std::vector<std::optional<AgentId>> agents_;
};

/// Scatters every dataset item onto a distinct uniformly chosen free cell of
/// a fresh grid, in id order. Throws CapacityError when items exceed cells.
Grid place_items_randomly(const Dataset& data, int side, Rng& rng);

}  // namespace acluster
