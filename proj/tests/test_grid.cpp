#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "acluster/grid.hpp"

using namespace acluster;

namespace {
Dataset points(int n) {
  std::ostringstream text;
  for (int i = 0; i < n; ++i) text << i << ',' << (i % 7) << '\n';
  std::istringstream in(text.str());
  return load_dataset(in);
}
}  // namespace

TEST_CASE("neighbors8 wraps at the origin") {
  const Grid g(57);
  const auto nb = g.neighbors8({0, 0});
  const auto has = [&](Coord c) { return std::find(nb.begin(), nb.end(), c) != nb.end(); };
  CHECK(has({56, 56}));
  CHECK(has({0, 56}));
  CHECK(has({56, 0}));
  CHECK(nb[0] == Coord{0, 56});  // heading 0 points to y-1
  CHECK(nb[2] == Coord{1, 0});
}

TEST_CASE("neighbors8 of an interior cell is the 3x3 box minus centre") {
  const Grid g(5);
  const auto nb = g.neighbors8({2, 2});
  std::set<std::pair<int, int>> got;
  for (auto c : nb) got.insert({c.x, c.y});
  std::set<std::pair<int, int>> want;
  for (int dx = -1; dx <= 1; ++dx)
    for (int dy = -1; dy <= 1; ++dy)
      if (dx || dy) want.insert({2 + dx, 2 + dy});
  CHECK(got == want);
}

TEST_CASE("neighbors8 yields 8 distinct cells for every position on small grids") {
  for (int side : {3, 4, 7}) {
    const Grid g(side);
    for (int y = 0; y < side; ++y)
      for (int x = 0; x < side; ++x) {
        std::set<std::pair<int, int>> s;
        for (auto c : g.neighbors8({x, y})) {
          CHECK(g.contains(c));
          s.insert({c.x, c.y});
        }
        CHECK(s.size() == 8);
        CHECK(s.count({x, y}) == 0);
      }
  }
}

TEST_CASE("grids smaller than 3 are rejected") { CHECK_THROWS_AS(Grid(2), ConfigError); }

TEST_CASE("count_items_around") {
  Grid g(9);
  CHECK(g.count_items_around({4, 4}) == 0);
  ItemId id = 0;
  for (auto c : g.neighbors8({4, 4})) g.put_item(c, id++);
  CHECK(g.count_items_around({4, 4}) == 8);
  g.put_item({4, 4}, id++);  // centre is not counted
  CHECK(g.count_items_around({4, 4}) == 8);
  CHECK(g.count_items_around({0, 0}) == 0);
  CHECK(g.count_items_around({3, 2}) == 2);  // (3,3) and (4,3)
}

TEST_CASE("count_items_around at the torus seam") {
  Grid g(6);
  g.put_item({5, 5}, 0);
  g.put_item({0, 5}, 1);
  g.put_item({5, 0}, 2);
  CHECK(g.count_items_around({0, 0}) == 3);
}

TEST_CASE("item and agent slots reject double occupancy") {
  Grid g(4);
  g.put_item({1, 1}, 3);
  CHECK_THROWS_AS(g.put_item({1, 1}, 4), InvariantError);
  CHECK(g.take_item({1, 1}) == 3);
  CHECK_THROWS_AS(g.take_item({1, 1}), InvariantError);
  g.put_agent({0, 0}, 0);
  g.put_agent({1, 0}, 1);
  CHECK_THROWS_AS(g.move_agent({0, 0}, {1, 0}), InvariantError);
  g.move_agent({0, 0}, {2, 0});
  CHECK(g.agent_at({2, 0}) == 0u);
  CHECK_FALSE(g.agent_at({0, 0}));
  CHECK_THROWS_AS(g.set_pheromone({0, 0}, -1.0), InvariantError);
}

TEST_CASE("place_items_randomly") {
  SUBCASE("800 items on 57x57") {
    const auto d = points(800);
    Rng rng(42);
    const Grid g = place_items_randomly(d, 57, rng);
    CHECK(g.resident_item_count() == 800);
    CHECK(g.cell_count() - g.resident_item_count() == 2449);
    std::set<ItemId> ids;
    for (const auto& s : g.items())
      if (s) ids.insert(*s);
    CHECK(ids.size() == 800);
  }
  SUBCASE("empty dataset leaves the grid empty") {
    Rng rng(1);
    const Grid g = place_items_randomly(Dataset{}, 5, rng);
    CHECK(g.resident_item_count() == 0);
  }
  SUBCASE("same seed gives the same placement") {
    const auto d = points(50);
    Rng a(9), b(9), c(9), other(10);
    CHECK(place_items_randomly(d, 10, a) == place_items_randomly(d, 10, b));
    CHECK_FALSE(place_items_randomly(d, 10, c) == place_items_randomly(d, 10, other));
  }
  SUBCASE("capacity") {
    const auto d = points(10);
    Rng rng(1);
    CHECK_THROWS_AS(place_items_randomly(d, 3, rng), CapacityError);
    const auto full = points(9);
    CHECK(place_items_randomly(full, 3, rng).resident_item_count() == 9);
  }
}
