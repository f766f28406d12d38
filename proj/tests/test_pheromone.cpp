#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "acluster/pheromone.hpp"
#include "oracles.hpp"

using namespace acluster;

TEST_CASE("weight_pheromone examples") {
  CHECK(weight_pheromone(0.0, 3.5, 0.2) == 1.0);
  CHECK(weight_pheromone(0.0, -2.0, 5.0) == 1.0);
  CHECK(weight_pheromone(1.0, 3.5, 0.2) == doctest::Approx(8.343437589946348).epsilon(1e-13));
  // Saturation towards (1 + 1/gamma)^beta.
  CHECK(weight_pheromone(1e12, 3.5, 0.2) == doctest::Approx(529.0897844411664).epsilon(1e-9));
  CHECK(weight_pheromone(1e3, 3.5, 0.2) < 529.0897844411664);
}

TEST_CASE("weight_pheromone closed form with gamma = 0, beta = 1") {
  for (double s : {0.0, 0.5, 2.0, 17.25}) CHECK(weight_pheromone(s, 1.0, 0.0) == 1.0 + s);
}

TEST_CASE("weight_pheromone increases with sigma for beta > 0") {
  double prev = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double w = weight_pheromone(i * 0.1, 3.5, 0.2);
    CHECK(w > prev);
    prev = w;
  }
}

TEST_CASE("delta_index is the circular distance") {
  CHECK(delta_index(Heading(0), 0) == 0);
  CHECK(delta_index(Heading(0), 4) == 4);
  CHECK(delta_index(Heading(1), 7) == 2);
  CHECK(delta_index(Heading(7), 0) == 1);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int d = delta_index(Heading(a), b);
      CHECK(d == std::min(std::abs(a - b), 8 - std::abs(a - b)));
      CHECK(d == delta_index(Heading(b), a));
    }
  CHECK_THROWS_AS(Heading(8), ConfigError);
}

TEST_CASE("DirectionWeights defaults") {
  DirectionWeights w;
  CHECK_NOTHROW(w.validate());
  CHECK(w.w[0] == 1.0);
  CHECK(w.w[3] == doctest::Approx(1.0 / 12.0));
  CHECK(w.w[4] == doctest::Approx(1.0 / 20.0));
  w.w[2] = 0.9;
  CHECK_THROWS_AS(w.validate(), ConfigError);
}

TEST_CASE("uniform pheromone gives the persistence weights") {
  Grid g(11);
  for (auto& v : g.pheromone()) v = 0.7;
  SimConfig cfg;
  const auto p = transition_probabilities(g, {5, 5}, Heading(0), cfg);
  REQUIRE(p);
  const std::array<double, 8> raw{1.0, 0.5, 0.25, 1.0 / 12, 1.0 / 20, 1.0 / 12, 0.25, 0.5};
  const double total = std::accumulate(raw.begin(), raw.end(), 0.0);
  for (int i = 0; i < 8; ++i) CHECK((*p)[i] == doctest::Approx(raw[i] / total).epsilon(1e-14));
}

TEST_CASE("fully blocked agent stays put") {
  Grid g(5);
  g.put_agent({2, 2}, 0);
  AgentId id = 1;
  for (auto c : g.neighbors8({2, 2})) g.put_agent(c, id++);
  CHECK_FALSE(transition_probabilities(g, {2, 2}, Heading(3), SimConfig{}).has_value());
}

TEST_CASE("transition probabilities normalize, exclude agents and are monotone") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  SimConfig cfg;
  for (int trial = 0; trial < 2000; ++trial) {
    Grid g(6);
    for (auto& v : g.pheromone()) v = u(gen);
    const Coord at{static_cast<int>(gen() % 6), static_cast<int>(gen() % 6)};
    g.put_agent(at, 0);
    AgentId next = 1;
    for (auto c : g.neighbors8(at))
      if (gen() % 3 == 0 && !g.agent_at(c)) g.put_agent(c, next++);
    const Heading h(static_cast<int>(gen() % 8));
    const auto p = transition_probabilities(g, at, h, cfg);
    if (next == 9) {
      CHECK_FALSE(p);
      continue;
    }
    REQUIRE(p);
    double sum = 0.0;
    for (int dir = 0; dir < 8; ++dir) {
      CHECK((*p)[dir] >= 0.0);
      if (g.agent_at(g.step(at, dir))) CHECK((*p)[dir] == 0.0);
      sum += (*p)[dir];
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);

    // Raising one admissible neighbour's sigma never lowers its probability.
    for (int dir = 0; dir < 8; ++dir) {
      const Coord c = g.step(at, dir);
      if (g.agent_at(c)) continue;
      Grid g2 = g;
      g2.add_pheromone(c, 1.0 + u(gen));
      const auto p2 = transition_probabilities(g2, at, h, cfg);
      CHECK((*p2)[dir] >= (*p)[dir]);
      break;
    }
  }
}

TEST_CASE("deposit adds eta plus p per neighbouring item") {
  SimConfig cfg;
  Grid g(5);
  CHECK(deposit(g, {2, 2}, 0, cfg) == doctest::Approx(0.07).epsilon(1e-15));
  Grid g8(5);
  CHECK(deposit(g8, {2, 2}, 8, cfg) == doctest::Approx(0.09).epsilon(1e-14));
  Grid g4(5);
  CHECK(deposit(g4, {2, 2}, 4, cfg) == doctest::Approx(0.08).epsilon(1e-14));
  // The n/alpha form with alpha = 400 is the same quantity.
  CHECK(deposit_amount(5, cfg) == doctest::Approx(0.07 + 5.0 / 400.0).epsilon(1e-15));
}

TEST_CASE("evaporate") {
  Grid g(4);
  g.set_pheromone({1, 1}, 1.0);
  evaporate(g, 0.015);
  CHECK(g.pheromone_at({1, 1}) == doctest::Approx(0.985).epsilon(1e-15));
  CHECK(g.pheromone_at({0, 0}) == 0.0);
  const Grid before = g;
  evaporate(g, 0.0);
  CHECK(g == before);
}

TEST_CASE("memory horizon: total pheromone decays as (1-k)^t without deposits") {
  Grid g(8);
  std::mt19937_64 gen(5);
  for (auto& v : g.pheromone()) v = std::uniform_real_distribution<double>(0, 2)(gen);
  const double start = std::accumulate(g.pheromone().begin(), g.pheromone().end(), 0.0);
  for (int t = 0; t < 200; ++t) evaporate(g, 0.015);
  const double end = std::accumulate(g.pheromone().begin(), g.pheromone().end(), 0.0);
  CHECK(end == doctest::Approx(start * std::pow(0.985, 200)).epsilon(1e-12));
}
