#include <doctest.h>

#include <random>
#include <sstream>

#include "acluster/config.hpp"
#include "acluster/core.hpp"
#include "oracles.hpp"

using namespace acluster;

namespace {
Dataset parse(const std::string& text, bool labels = false) {
  std::istringstream in(text);
  return load_dataset(in, LoadOptions{labels});
}
}  // namespace

TEST_CASE("load_dataset reads comma and tab separated records") {
  const auto d = parse("0,0\n1\t1\n");
  CHECK(d.size() == 2);
  CHECK(d.feature_dim() == 2);
  CHECK(d.d_max() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_FALSE(d.labeled());
}

TEST_CASE("load_dataset with a label column") {
  const auto d = parse("# x,y,label\n0.1,0.2,A\n\n0.3,0.4,B\n0.5,0.6,A\n", true);
  REQUIRE(d.size() == 3);
  CHECK(d.labeled());
  CHECK(d.labels() == std::vector<std::string>{"A", "B"});
  CHECK(d.item(1).label == "B");
  CHECK(d.label_index() == std::vector<std::int32_t>{0, 1, 0});
  CHECK(d.item(2).id == 2);
}

TEST_CASE("single record falls back to d_max = 1") {
  CHECK(parse("3.5,2\n").d_max() == 1.0);
  CHECK(parse("1,1\n1,1\n1,1\n").d_max() == 1.0);
}

TEST_CASE("load_dataset errors") {
  CHECK_THROWS_AS(parse("1,2\n3\n"), FormatError);
  CHECK_THROWS_AS(parse("1,x\n"), ParseError);
  CHECK_THROWS_AS(parse("1,nan\n"), ParseError);
  CHECK_THROWS_AS(parse(""), EmptyDatasetError);
  CHECK_THROWS_AS(parse("# only a comment\n\n"), EmptyDatasetError);
  CHECK_THROWS_AS(parse("A\n", true), FormatError);
  CHECK_THROWS_AS(load_dataset_file("/nonexistent/data.csv"), IoError);
}

TEST_CASE("write_dataset round-trips exactly") {
  const auto d = parse("0.1,-2.5e-7,A\n1e300,0.30000000000000004,B\n", true);
  std::ostringstream out;
  write_dataset(out, d);
  const auto back = parse(out.str(), true);
  REQUIRE(back.size() == d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(back.item(i).features == d.item(i).features);
    CHECK(back.item(i).label == d.item(i).label);
  }
  CHECK(back.d_max() == d.d_max());
}

TEST_CASE("normalized_distance examples") {
  const auto d = parse("0,0\n0.3,0.4\n");
  // d_max is the distance of the only pair, so it normalizes to exactly 1.
  CHECK(normalized_distance(d.item(0), d.item(1), d) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(normalized_distance(d.item(0), d.item(0), d) == 0.0);
  CHECK(rms_distance({0, 0}, {0.3, 0.4}) == doctest::Approx(0.3535533905932738).epsilon(1e-15));

  Item bad{0, {1.0, 2.0, 3.0}, {}};
  CHECK_THROWS_AS(normalized_distance(bad, d.item(0), d), DimensionError);
  CHECK_THROWS_AS(rms_distance({1.0}, {1.0, 2.0}), DimensionError);
}

TEST_CASE("normalized_distance is a pseudometric bounded by 1 (exhaustive on random sets)") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::ostringstream text;
    const int n = 12;
    const int f = 1 + trial % 4;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < f; ++k) text << (k ? "," : "") << u(gen);
      text << '\n';
    }
    const auto d = parse(text.str());
    double seen_max = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const double dab = normalized_distance(d.item(a), d.item(b), d);
        CHECK(dab >= 0.0);
        CHECK(dab <= 1.0 + 1e-15);
        CHECK(dab == normalized_distance(d.item(b), d.item(a), d));
        CHECK(dab == doctest::Approx(oracle::rms(d.item(a).features, d.item(b).features) / d.d_max())
                         .epsilon(1e-14));
        CHECK(d.distance(a, b) == dab);
        seen_max = std::max(seen_max, dab);
        for (int c = 0; c < n; ++c)
          CHECK(dab <= normalized_distance(d.item(a), d.item(c), d) +
                           normalized_distance(d.item(c), d.item(b), d) + 1e-12);
      }
    CHECK(seen_max == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("load_dataset is deterministic") {
  const std::string text = "0.1,0.9\n0.7,0.2\n0.3,0.3\n";
  const auto a = parse(text);
  const auto b = parse(text);
  CHECK(a.d_max() == b.d_max());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.item(i).features == b.item(i).features);
}

TEST_CASE("SimConfig validation") {
  SimConfig ok;
  CHECK_NOTHROW(ok.validate());
  auto broken = [](auto mutate) {
    SimConfig c;
    mutate(c);
    return c;
  };
  CHECK_THROWS_AS(broken([](SimConfig& c) { c.k1 = 0; }).validate(), ConfigError);
  CHECK_THROWS_AS(broken([](SimConfig& c) { c.k2 = -1; }).validate(), ConfigError);
  CHECK_THROWS_AS(broken([](SimConfig& c) { c.gamma = -0.1; }).validate(), ConfigError);
  CHECK_THROWS_AS(broken([](SimConfig& c) { c.k_evap = 1.5; }).validate(), ConfigError);
  CHECK_THROWS_AS(broken([](SimConfig& c) { c.steepness = 1.0; }).validate(), ConfigError);
  CHECK_THROWS_AS(broken([](SimConfig& c) { c.lf_s = 4; }).validate(), ConfigError);
  CHECK_THROWS_AS(broken([](SimConfig& c) { c.grid_side = 2; }).validate(), ConfigError);
  CHECK_THROWS_AS(broken([](SimConfig& c) { c.n_agents = 0; }).validate(), ConfigError);
  CHECK_THROWS_AS(broken([](SimConfig& c) {
                    c.grid_side = 3;
                    c.n_agents = 10;
                  }).validate(),
                  ConfigError);
  CHECK_THROWS_AS(broken([](SimConfig& c) { c.t_max = -1; }).validate(), ConfigError);
  CHECK_NOTHROW(broken([](SimConfig& c) { c.t_max = 0; }).validate());
  CHECK_THROWS_AS(parse_function_type(5), ConfigError);
  CHECK(parse_function_type(2) == FunctionType::Type2);
}
