#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "acluster/export.hpp"
#include "sim_fixture.hpp"

using namespace acluster;

namespace {

Dataset labeled(const std::vector<std::string>& labels) {
  std::ostringstream text;
  for (std::size_t i = 0; i < labels.size(); ++i) text << i << ',' << labels[i] << '\n';
  std::istringstream in(text.str());
  return load_dataset(in, LoadOptions{true});
}

}  // namespace

TEST_CASE("class colours are distinct and avoid empty and agent colours") {
  std::set<Rgb> seen;
  for (std::size_t c = 0; c < 200; ++c) {
    const Rgb col = class_color(c);
    CHECK(col != kEmptyColor);
    CHECK(col != kAgentColor);
    seen.insert(col);
  }
  CHECK(seen.size() == 200);
}

TEST_CASE("ppm snapshot maps pixels back to cell contents") {
  const auto data = labeled({"A", "B", "C", "A"});
  SimConfig cfg;
  auto s = fixture::make_state(cfg, data,
                               {4, {{{0, 0}, 0}, {{1, 0}, 1}, {{2, 3}, 2}, {{3, 3}, 3}}, {{1, 1}, {3, 3}}});
  std::ostringstream out;
  write_ppm(out, s);
  std::istringstream in(out.str());
  std::string magic;
  int w = 0, h = 0, maxv = 0;
  in >> magic >> w >> h >> maxv;
  CHECK(magic == "P3");
  CHECK(w == 4);
  CHECK(h == 4);
  CHECK(maxv == 255);
  std::vector<Rgb> px;
  int r, g, b;
  while (in >> r >> g >> b)
    px.push_back({std::uint8_t(r), std::uint8_t(g), std::uint8_t(b)});
  REQUIRE(px.size() == 16);
  CHECK(px[0] == class_color(0));
  CHECK(px[1] == class_color(1));
  CHECK(px[3 * 4 + 2] == class_color(2));
  CHECK(px[1 * 4 + 1] == kAgentColor);
  CHECK(px[3 * 4 + 3] == kAgentColor);  // agent drawn over the item
  CHECK(px[2 * 4 + 2] == kEmptyColor);
  std::map<Rgb, int> counts;
  for (const auto& p : px) ++counts[p];
  CHECK(counts[kEmptyColor] == 16 - 3 - 2);
}

TEST_CASE("svg snapshot is well formed") {
  const auto data = labeled({"A", "B"});
  SimConfig cfg;
  auto s = fixture::make_state(cfg, data, {5, {{{0, 0}, 0}, {{1, 0}, 1}}, {{2, 2}}});
  std::ostringstream out;
  write_svg(out, s);
  const auto text = out.str();
  CHECK(text.find("<svg") != std::string::npos);
  CHECK(text.find("</svg>") != std::string::npos);
}

TEST_CASE("entropy csv round-trips") {
  const auto data = labeled({"A", "B"});
  std::vector<EntropyRecord> series{{0, {{"A", 1.0}, {"B", 1.0}}, 2.0},
                                    {1000, {{"A", 0.125}, {"B", 0.1}}, 0.225}};
  std::ostringstream out;
  write_entropy_csv(out, series, data);
  CHECK(out.str().rfind("t,E_A,E_B,E_total\n", 0) == 0);
  std::istringstream in(out.str());
  const auto s = read_entropy_csv(in);
  CHECK(s.columns == std::vector<std::string>{"E_A", "E_B", "E_total"});
  CHECK(s.t == std::vector<std::int64_t>{0, 1000});
  CHECK(s.total == std::vector<double>{2.0, 0.225});

  std::istringstream bad("x,E_total\n");
  CHECK_THROWS_AS(read_entropy_csv(bad), FormatError);
  std::istringstream ragged("t,E_total\n1\n");
  CHECK_THROWS_AS(read_entropy_csv(ragged), FormatError);
}

TEST_CASE("format_real round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 0.0, 1e-300, 8.343437589946348}) {
    CHECK(std::stod(format_real(v)) == v);
  }
  CHECK(format_real(0.5) == "0.5");
}

TEST_CASE("cluster tags") {
  CHECK(cluster_tag(0) == "A");
  CHECK(cluster_tag(25) == "Z");
  CHECK(cluster_tag(26) == "AA");
  CHECK(cluster_tag(27) == "AB");
  CHECK(cluster_tag(26 + 26 * 26) == "AAA");
}

TEST_CASE("content digest") {
  std::istringstream empty("");
  CHECK(content_digest(empty) == "cbf29ce484222325");
  std::istringstream a("a");
  CHECK(content_digest(a) == "af63dc4c8601ec8c");
}

TEST_CASE("cluster listing uses labels when they identify items") {
  const auto data = labeled({"doc0", "doc1", "doc2"});
  Grid g(6);
  g.put_item({0, 0}, 0);
  g.put_item({1, 0}, 2);
  g.put_item({4, 4}, 1);
  std::ostringstream out;
  write_cluster_listing(out, extract_clusters(g, data), data);
  CHECK(out.str() ==
        "# clusters: 2\n# resident items: 3\n# mean purity (size >= 10): n/a\n"
        "# A size=2\n(A) doc0, doc2.\n# B size=1\n(B) doc1.\n");
}

TEST_CASE("cluster listing uses ids with shared labels") {
  const auto data = labeled({"A", "A", "B"});
  Grid g(6);
  g.put_item({0, 0}, 0);
  g.put_item({1, 1}, 1);
  g.put_item({2, 2}, 2);
  std::ostringstream out;
  write_cluster_listing(out, extract_clusters(g, data), data, 1);
  CHECK(out.str().find("(A) 0, 1, 2.\n") != std::string::npos);
  CHECK(out.str().find("majority=A purity=") != std::string::npos);
}
