#include "acluster/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "acluster/export.hpp"

namespace acluster {

namespace fs = std::filesystem;
using nlohmann::json;

int exit_code_for(const std::exception& e) noexcept {
  if (dynamic_cast<const UsageError*>(&e)) return kExitUsage;
  if (dynamic_cast<const IoError*>(&e)) return kExitIo;
  if (dynamic_cast<const ConfigError*>(&e)) return kExitConfig;
  return kExitInternal;
}

std::string default_output_dir() {
  if (const char* env = std::getenv("ACLUSTER_OUT_DIR"); env && *env) return env;
  return "acluster_out";
}

namespace {

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot write '" + p.string() + "'");
  return out;
}

void finish(std::ofstream& out, const fs::path& p) {
  out.flush();
  if (!out) throw IoError("write failed for '" + p.string() + "'");
}

double to_real(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw UsageError("bad number for " + what + ": '" + s + "'");
  return v;
}

int to_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw UsageError("bad integer for " + what + ": '" + s + "'");
  return v;
}

std::vector<std::string> split_on(const std::string& s, char delim) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, delim)) out.push_back(part);
  return out;
}

json config_to_json(const SimConfig& c) {
  return json{{"k1", c.k1},
              {"k2", c.k2},
              {"beta", c.beta},
              {"gamma", c.gamma},
              {"eta", c.eta},
              {"k_evap", c.k_evap},
              {"p_dep", c.p_dep},
              {"theta_count", c.theta_count},
              {"steepness", c.steepness},
              {"t_max", c.t_max},
              {"function_type", static_cast<int>(c.function_type)},
              {"lf_alpha", c.lf_alpha},
              {"lf_s", c.lf_s},
              {"grid_side", c.grid_side},
              {"n_agents", c.n_agents},
              {"seed", c.seed},
              {"drain_cap", c.drain_cap},
              {"random_order", c.random_order}};
}

SimConfig config_from_json(const json& j) {
  SimConfig c;
  c.k1 = j.at("k1").get<double>();
  c.k2 = j.at("k2").get<double>();
  c.beta = j.at("beta").get<double>();
  c.gamma = j.at("gamma").get<double>();
  c.eta = j.at("eta").get<double>();
  c.k_evap = j.at("k_evap").get<double>();
  c.p_dep = j.at("p_dep").get<double>();
  c.theta_count = j.at("theta_count").get<double>();
  c.steepness = j.at("steepness").get<double>();
  c.t_max = j.at("t_max").get<std::int64_t>();
  c.function_type = parse_function_type(j.at("function_type").get<int>());
  c.lf_alpha = j.at("lf_alpha").get<double>();
  c.lf_s = j.at("lf_s").get<int>();
  c.grid_side = j.at("grid_side").get<int>();
  c.n_agents = j.at("n_agents").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.drain_cap = j.at("drain_cap").get<std::int64_t>();
  c.random_order = j.at("random_order").get<bool>();
  return c;
}

std::string snapshot_name(std::int64_t t) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "snapshots/t%07lld", static_cast<long long>(t));
  return buf;
}

}  // namespace

GaussianSpec parse_cluster_spec(const std::string& text) {
  std::vector<GaussianCluster> clusters;
  for (const auto& entry : split_on(text, ';')) {
    if (entry.empty()) continue;
    const auto colon = entry.find(':');
    if (colon == std::string::npos || colon == 0)
      throw UsageError("cluster entry must look like LABEL:mx,my,sd,count; got '" + entry + "'");
    const auto nums = split_on(entry.substr(colon + 1), ',');
    if (nums.size() != 4)
      throw UsageError("cluster entry needs mx,my,sd,count; got '" + entry + "'");
    clusters.push_back({entry.substr(0, colon), to_real(nums[0], "mean x"),
                        to_real(nums[1], "mean y"), to_real(nums[2], "stddev"),
                        to_int(nums[3], "count")});
  }
  if (clusters.empty()) throw UsageError("empty cluster spec");
  return GaussianSpec(std::move(clusters));
}

BlobArgs parse_blob_spec(const std::string& text) {
  const auto parts = split_on(text, ':');
  if (parts.size() != 4) throw UsageError("blob spec must look like N:K:DIM:SD; got '" + text + "'");
  return {to_int(parts[0], "item count"), to_int(parts[1], "cluster count"),
          to_int(parts[2], "dimension"), to_real(parts[3], "stddev")};
}

void cmd_generate(const GenerateRequest& req) {
  if (req.gaussian.has_value() == req.blobs.has_value())
    throw UsageError("choose exactly one of a gaussian spec or a blob spec");
  if (req.output.empty()) throw UsageError("missing output path");
  Rng rng(req.seed);
  const Dataset data =
      req.gaussian ? generate_gaussian(*req.gaussian, rng)
                   : generate_blobs(req.blobs->n_items, req.blobs->n_clusters, req.blobs->dim,
                                    req.blobs->stddev, rng);
  const fs::path out_path(req.output);
  if (out_path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(out_path.parent_path(), ec);
  }
  {
    auto out = open_out(out_path);
    write_dataset(out, data);
    finish(out, out_path);
  }

  json m;
  m["artifact"] = "acluster";
  m["version"] = ACLUSTER_VERSION;
  m["command"] = "generate";
  m["seed"] = req.seed;
  if (req.gaussian) {
    json cl = json::array();
    for (const auto& c : req.gaussian->clusters())
      cl.push_back({{"label", c.label},
                    {"mean_x", c.mean_x},
                    {"mean_y", c.mean_y},
                    {"stddev", c.stddev},
                    {"count", c.count}});
    m["gaussian"] = cl;
  } else {
    m["blobs"] = {{"n_items", req.blobs->n_items},
                  {"n_clusters", req.blobs->n_clusters},
                  {"dim", req.blobs->dim},
                  {"stddev", req.blobs->stddev}};
  }
  m["output"] = out_path.filename().string();
  m["digest"] = content_digest_file(out_path.string());
  m["items"] = data.size();
  const fs::path manifest_path = out_path.string() + ".manifest.json";
  auto out = open_out(manifest_path);
  out << m.dump(2) << '\n';
  finish(out, manifest_path);
}

RunSummary cmd_run(const RunRequest& request, const std::vector<Observer>& extra) {
  RunSummary summary;
  RunRequest req = request;
  if (req.out_dir.empty()) req.out_dir = default_output_dir();
  if (req.dataset_path.empty()) throw UsageError("missing dataset path");

  const Dataset data = load_dataset_file(req.dataset_path, req.load);
  const std::string digest = content_digest_file(req.dataset_path);
  if (req.auto_size) {
    const auto size = size_experiment(static_cast<int>(data.size()));
    req.cfg.grid_side = size.grid_side;
    req.cfg.n_agents = size.n_agents;
    req.auto_size = false;
  }
  req.cfg.validate();
  if (data.size() > static_cast<std::size_t>(req.cfg.grid_side) * req.cfg.grid_side)
    throw CapacityError("dataset has more items than grid cells");

  const fs::path dir(req.out_dir);
  std::error_code ec;
  fs::create_directories(dir / "snapshots", ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());

  std::set<std::int64_t> snap_steps{0};
  for (std::int64_t s : req.snapshot_steps)
    if (s >= 0 && s <= req.cfg.t_max) snap_steps.insert(s);

  std::vector<std::string> outputs{"entropy.csv"};
  RunOptions opts;
  opts.entropy_every = req.entropy_every;
  opts.carried = req.carried;
  opts.observers.push_back({1, [&](std::int64_t t, const SimState& st) {
                              if (!snap_steps.count(t)) return;
                              const std::string name = snapshot_name(t) + ".ppm";
                              auto out = open_out(dir / name);
                              write_ppm(out, st);
                              finish(out, dir / name);
                              outputs.push_back(name);
                              if (req.svg) {
                                const std::string svg = snapshot_name(t) + ".svg";
                                auto os = open_out(dir / svg);
                                write_svg(os, st);
                                finish(os, dir / svg);
                                outputs.push_back(svg);
                              }
                            }});
  if (req.check_invariants && req.entropy_every > 0)
    opts.observers.push_back(
        {req.entropy_every, [](std::int64_t, const SimState& st) { check_invariants(st); }});
  double initial_entropy = 0.0;
  opts.observers.push_back({std::numeric_limits<std::int64_t>::max(),
                            [&](std::int64_t t, const SimState& st) {
                              if (t == 0) initial_entropy = measure_entropy(st, req.carried).total;
                            }});
  for (const auto& o : extra) opts.observers.push_back(o);

  RunResult result = run(req.cfg, data, opts);
  check_invariants(result.state);

  {
    const fs::path p = dir / "entropy.csv";
    auto out = open_out(p);
    write_entropy_csv(out, result.entropy, data);
    finish(out, p);
  }
  {
    const fs::path p = dir / "snapshots/final.ppm";
    auto out = open_out(p);
    write_ppm(out, result.state);
    finish(out, p);
    outputs.push_back("snapshots/final.ppm");
    if (req.svg) {
      const fs::path ps = dir / "snapshots/final.svg";
      auto os = open_out(ps);
      write_svg(os, result.state);
      finish(os, ps);
      outputs.push_back("snapshots/final.svg");
    }
  }
  summary.clusters = extract_clusters(result.state.grid(), data, req.connectivity);
  {
    const fs::path p = dir / "clusters.txt";
    auto out = open_out(p);
    write_cluster_listing(out, summary.clusters, data);
    finish(out, p);
    outputs.push_back("clusters.txt");
  }

  summary.initial_entropy = initial_entropy;
  summary.final_entropy = result.final_entropy.total;
  summary.drain_steps = result.drain_steps;
  summary.forced_placements = result.forced_placements;
  outputs.push_back("manifest.json");
  summary.outputs = outputs;
  summary.effective = req;

  json m;
  m["artifact"] = "acluster";
  m["version"] = ACLUSTER_VERSION;
  m["command"] = "run";
  m["config"] = config_to_json(req.cfg);
  m["dataset"] = {{"path", req.dataset_path},
                  {"digest", digest},
                  {"label_column", req.load.label_column},
                  {"items", data.size()},
                  {"features", data.feature_dim()}};
  m["options"] = {{"entropy_every", req.entropy_every},
                  {"snapshot_steps", req.snapshot_steps},
                  {"svg", req.svg},
                  {"carried", req.carried == CarriedPolicy::Exclude ? "exclude" : "carrier"},
                  {"connectivity", static_cast<int>(req.connectivity)},
                  {"check_invariants", req.check_invariants}};
  m["results"] = {{"final_entropy", summary.final_entropy},
                  {"drain_steps", summary.drain_steps},
                  {"forced_placements", summary.forced_placements},
                  {"clusters", summary.clusters.n_clusters}};
  m["outputs"] = outputs;
  const fs::path p = dir / "manifest.json";
  auto out = open_out(p);
  out << m.dump(2) << '\n';
  finish(out, p);
  return summary;
}

RunRequest request_from_manifest(const std::string& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) throw IoError("cannot open manifest '" + manifest_path + "'");
  json m;
  try {
    in >> m;
  } catch (const json::exception& e) {
    throw FormatError(std::string("manifest is not valid JSON: ") + e.what());
  }
  try {
    if (m.at("command").get<std::string>() != "run")
      throw FormatError("manifest does not describe a run");
    RunRequest req;
    req.cfg = config_from_json(m.at("config"));
    const auto& ds = m.at("dataset");
    req.dataset_path = ds.at("path").get<std::string>();
    req.load.label_column = ds.at("label_column").get<bool>();
    const auto& o = m.at("options");
    req.entropy_every = o.at("entropy_every").get<std::int64_t>();
    req.snapshot_steps = o.at("snapshot_steps").get<std::vector<std::int64_t>>();
    req.svg = o.at("svg").get<bool>();
    req.carried = o.at("carried").get<std::string>() == "carrier" ? CarriedPolicy::AtCarrier
                                                                  : CarriedPolicy::Exclude;
    req.connectivity = o.at("connectivity").get<int>() == 4 ? Connectivity::Four
                                                            : Connectivity::Eight;
    req.check_invariants = o.at("check_invariants").get<bool>();
    const std::string digest = content_digest_file(req.dataset_path);
    if (digest != ds.at("digest").get<std::string>())
      throw ConfigError("dataset '" + req.dataset_path + "' does not match the manifest digest");
    return req;
  } catch (const json::exception& e) {
    throw FormatError(std::string("manifest is missing fields: ") + e.what());
  }
}

std::vector<CompareRow> cmd_compare(const std::vector<std::string>& paths,
                                    const std::string& merged_csv, std::ostream& table) {
  if (paths.size() < 2) throw UsageError("compare needs at least two entropy files");
  std::vector<EntropySeries> series;
  std::vector<std::string> names;
  for (const auto& p : paths) {
    std::ifstream in(p);
    if (!in) throw IoError("cannot open '" + p + "'");
    series.push_back(read_entropy_csv(in));
    if (series.back().t.empty()) throw FormatError("'" + p + "' has no rows");
    const fs::path fp(p);
    std::string name = fp.has_parent_path() ? fp.parent_path().filename().string()
                                            : fp.stem().string();
    if (name.empty()) name = fp.stem().string();
    const auto dup = std::count(names.begin(), names.end(), name) +
                     std::count_if(names.begin(), names.end(), [&](const std::string& n) {
                       return n.rfind(name + "#", 0) == 0;
                     });
    names.push_back(dup ? name + "#" + std::to_string(dup + 1) : name);
  }
  for (std::size_t i = 1; i < series.size(); ++i)
    if (series[i].t != series[0].t)
      throw AlignmentError("'" + paths[i] + "' uses a different step grid than '" + paths[0] + "'");

  {
    const fs::path p(merged_csv);
    if (p.has_parent_path()) {
      std::error_code ec;
      fs::create_directories(p.parent_path(), ec);
    }
    auto out = open_out(p);
    out << 't';
    for (const auto& n : names) out << ',' << n;
    out << '\n';
    for (std::size_t r = 0; r < series[0].t.size(); ++r) {
      out << series[0].t[r];
      for (const auto& s : series) out << ',' << format_real(s.total[r]);
      out << '\n';
    }
    finish(out, p);
  }

  std::vector<CompareRow> rows;
  for (std::size_t i = 0; i < series.size(); ++i) rows.push_back({names[i], series[i].total.back()});
  std::stable_sort(rows.begin(), rows.end(),
                   [](const CompareRow& a, const CompareRow& b) { return a.final_total < b.final_total; });
  table << "rank,run,final_E_total\n";
  for (std::size_t i = 0; i < rows.size(); ++i)
    table << i + 1 << ',' << rows[i].name << ',' << format_real(rows[i].final_total) << '\n';
  return rows;
}

}  // namespace acluster
