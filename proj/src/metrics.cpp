#include "acluster/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "acluster/kernels.hpp"

namespace acluster {

namespace {

int class_count(const Dataset& data) {
  return data.labeled() ? static_cast<int>(data.labels().size()) : 1;
}

std::string class_name(const Dataset& data, int c) {
  return data.labeled() ? data.labels()[static_cast<std::size_t>(c)] : std::string("all");
}

}  // namespace

std::vector<std::int32_t> label_map(const Grid& grid, const Dataset& data,
                                    std::span<const CarriedItem> carried) {
  std::vector<std::int32_t> map(grid.cell_count(), -1);
  const auto& idx = data.label_index();
  const auto& items = grid.items();
  for (std::size_t i = 0; i < items.size(); ++i)
    if (items[i]) map[i] = idx[*items[i]];
  for (const CarriedItem& c : carried) {
    auto& slot = map[grid.index(c.pos)];
    if (slot < 0) slot = idx[c.item];
  }
  return map;
}

EntropyRecord entropy_from_label_map(std::span<const std::int32_t> labels, int side,
                                     const Dataset& data, std::int64_t t) {
  const int nc = class_count(data);
  const auto counts = kernels::entropy_counts_parallel(labels, side, nc);
  EntropyRecord rec;
  rec.t = t;
  for (int c = 0; c < nc; ++c) {
    if (counts.members[c] == 0) continue;
    const double e = static_cast<double>(counts.foreign[c]) /
                     (8.0 * static_cast<double>(counts.members[c]));
    rec.per_class[class_name(data, c)] = e;
  }
  // Sum in label order so the total does not depend on map iteration details.
  for (const auto& [name, e] : rec.per_class) rec.total += e;
  return rec;
}

double class_entropy(const Grid& grid, const Dataset& data, const std::string& label) {
  const auto rec = total_entropy(grid, data);
  const auto it = rec.per_class.find(label);
  if (it == rec.per_class.end())
    throw UndefinedLabelError("no resident item has label '" + label + "'");
  return it->second;
}

EntropyRecord total_entropy(const Grid& grid, const Dataset& data, std::int64_t t) {
  const auto map = label_map(grid, data);
  return entropy_from_label_map(map, grid.side(), data, t);
}

ClusterReport extract_clusters(const Grid& grid, const Dataset& data, Connectivity conn) {
  ClusterReport report;
  const auto& items = grid.items();
  std::vector<char> seen(items.size(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < items.size(); ++start) {
    if (!items[start] || seen[start]) continue;
    Cluster cl;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      cl.members.push_back(*items[cur]);
      const Coord c = grid.coord(cur);
      for (int dir = 0; dir < 8; ++dir) {
        if (conn == Connectivity::Four && dir % 2 == 1) continue;  // odd headings are diagonals
        const std::size_t nb = grid.index(grid.step(c, dir));
        if (items[nb] && !seen[nb]) {
          seen[nb] = 1;
          stack.push_back(nb);
        }
      }
    }
    std::sort(cl.members.begin(), cl.members.end());
    cl.size = cl.members.size();
    if (data.labeled()) {
      std::map<std::string, std::size_t> tally;
      for (ItemId id : cl.members) ++tally[data.item(id).label.value_or("")];
      std::size_t best = 0;
      for (const auto& [name, count] : tally)
        if (count > best) {
          best = count;
          cl.majority_label = name;
        }
      cl.purity = static_cast<double>(best) / static_cast<double>(cl.size);
    }
    report.clusters.push_back(std::move(cl));
  }
  report.n_clusters = report.clusters.size();
  return report;
}

double mean_purity(const ClusterReport& report, std::size_t min_size) {
  double acc = 0.0;
  std::size_t n = 0;
  for (const Cluster& c : report.clusters)
    if (c.size >= min_size) {
      acc += c.purity;
      ++n;
    }
  return n ? acc / static_cast<double>(n) : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace acluster
