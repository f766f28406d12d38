#include "acluster/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>

#include "acluster/config.hpp"
#include "acluster/kernels.hpp"

namespace acluster {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_record(std::string_view line) {
  const char delim = line.find('\t') != std::string_view::npos ? '\t' : ',';
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delim, start);
    fields.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

double parse_real(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line_no) + ": not a number: '" +
                     std::string(field) + "'");
  }
  return value;
}

}  // namespace

Dataset::Dataset(std::vector<Item> items) : items_(std::move(items)) {
  if (items_.empty()) return;
  feature_dim_ = items_.front().features.size();
  if (feature_dim_ == 0) throw DimensionError("items must have at least one feature");

  std::vector<double> rows;
  rows.reserve(items_.size() * feature_dim_);
  for (std::size_t i = 0; i < items_.size(); ++i) {
    const Item& it = items_[i];
    if (it.features.size() != feature_dim_)
      throw DimensionError("item " + std::to_string(it.id) + " has " +
                           std::to_string(it.features.size()) + " features, expected " +
                           std::to_string(feature_dim_));
    if (it.id != i)
      throw FormatError("item ids must be 0..n-1 in order; got " + std::to_string(it.id) +
                        " at position " + std::to_string(i));
    rows.insert(rows.end(), it.features.begin(), it.features.end());
  }

  const double dmax = kernels::max_pairwise_rms_parallel(rows, feature_dim_);
  d_max_ = dmax > 0.0 ? dmax : 1.0;

  const bool any_label = std::any_of(items_.begin(), items_.end(),
                                     [](const Item& it) { return it.label.has_value(); });
  labeled_ = any_label;
  label_index_.assign(items_.size(), 0);
  if (labeled_) {
    std::map<std::string, std::int32_t> index;
    for (const Item& it : items_) index.emplace(it.label.value_or(""), 0);
    std::int32_t next = 0;
    for (auto& [name, idx] : index) {
      idx = next++;
      labels_.push_back(name);
    }
    for (std::size_t i = 0; i < items_.size(); ++i)
      label_index_[i] = index.at(items_[i].label.value_or(""));
  }
}

double Dataset::distance(ItemId a, ItemId b) const noexcept {
  const auto& fa = items_[a].features;
  const auto& fb = items_[b].features;
  double acc = 0.0;
  for (std::size_t k = 0; k < feature_dim_; ++k) {
    const double diff = fa[k] - fb[k];
    acc += diff * diff;
  }
  return std::sqrt(acc / static_cast<double>(feature_dim_)) / d_max_;
}

Dataset load_dataset(std::istream& in, const LoadOptions& opts) {
  std::vector<Item> items;
  std::size_t expected_fields = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto fields = split_record(body);
    if (expected_fields == 0) {
      expected_fields = fields.size();
      if (opts.label_column && expected_fields < 2)
        throw FormatError("line " + std::to_string(line_no) +
                          ": need at least one feature column before the label");
    } else if (fields.size() != expected_fields) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(expected_fields) + " fields, found " +
                        std::to_string(fields.size()));
    }
    const std::size_t n_features = opts.label_column ? fields.size() - 1 : fields.size();
    Item item;
    item.id = static_cast<ItemId>(items.size());
    item.features.reserve(n_features);
    for (std::size_t k = 0; k < n_features; ++k)
      item.features.push_back(parse_real(fields[k], line_no));
    if (opts.label_column) item.label = std::string(fields.back());
    items.push_back(std::move(item));
  }
  if (in.bad()) throw IoError("read failure while loading dataset");
  if (items.empty()) throw EmptyDatasetError("dataset has no records");
  return Dataset(std::move(items));
}

Dataset load_dataset_file(const std::string& path, const LoadOptions& opts) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dataset '" + path + "'");
  return load_dataset(in, opts);
}

void write_dataset(std::ostream& out, const Dataset& data) {
  char buf[64];
  for (const Item& it : data.items()) {
    for (std::size_t k = 0; k < it.features.size(); ++k) {
      if (k) out << ',';
      const auto res = std::to_chars(buf, buf + sizeof buf, it.features[k]);
      out.write(buf, res.ptr - buf);
    }
    if (it.label) out << ',' << *it.label;
    out << '\n';
  }
}

double rms_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size())
    throw DimensionError("feature length mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  if (a.empty()) throw DimensionError("empty feature vectors");
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    acc += diff * diff;
  }
  return std::sqrt(acc / static_cast<double>(a.size()));
}

double normalized_distance(const Item& a, const Item& b, const Dataset& data) {
  if (a.features.size() != data.feature_dim() || b.features.size() != data.feature_dim())
    throw DimensionError("item does not match dataset feature dimension");
  return rms_distance(a.features, b.features) / data.d_max();
}

// SimConfig

namespace {
void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError("invalid configuration: " + what);
}
}  // namespace

void SimConfig::validate() const {
  require(std::isfinite(k1) && k1 > 0.0, "k1 must be positive");
  require(std::isfinite(k2) && k2 > 0.0, "k2 must be positive");
  require(std::isfinite(beta), "beta must be finite");
  require(std::isfinite(gamma) && gamma >= 0.0, "gamma must be non-negative");
  require(std::isfinite(eta) && eta >= 0.0, "eta must be non-negative");
  require(k_evap >= 0.0 && k_evap <= 1.0, "k_evap must lie in [0,1]");
  require(std::isfinite(p_dep) && p_dep >= 0.0, "p_dep must be non-negative");
  require(std::isfinite(theta_count) && theta_count > 0.0, "theta_count must be positive");
  require(std::isfinite(steepness) && steepness > 1.0, "steepness must exceed 1");
  require(t_max >= 0, "t_max must be non-negative");
  const int ft = static_cast<int>(function_type);
  require(ft >= 1 && ft <= 4, "function type must be 1..4");
  require(std::isfinite(lf_alpha) && lf_alpha > 0.0, "lf_alpha must be positive");
  require(lf_s >= 3 && lf_s % 2 == 1, "lf_s must be an odd integer >= 3");
  require(grid_side >= 3, "grid side must be at least 3");
  require(n_agents >= 1, "at least one agent is required");
  require(static_cast<std::int64_t>(n_agents) <=
              static_cast<std::int64_t>(grid_side) * grid_side,
          "more agents than grid cells");
  require(drain_cap >= 0, "drain_cap must be non-negative");
}

std::string to_string(FunctionType t) { return "#" + std::to_string(static_cast<int>(t)); }

FunctionType parse_function_type(int v) {
  if (v < 1 || v > 4) throw ConfigError("function type must be 1..4, got " + std::to_string(v));
  return static_cast<FunctionType>(v);
}

}  // namespace acluster
