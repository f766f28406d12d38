// acluster: generate benchmark data, run ant-clustering simulations, compare
// entropy curves.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acluster/commands.hpp"

using namespace acluster;

namespace {

struct RunFlags {
  int type = 1;
  std::optional<double> k2;
  std::string carried = "exclude";
  int connectivity = 8;
  std::string manifest;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stigmergic ant clustering on a toroidal grid"};
  app.require_subcommand(1);

  // generate
  GenerateRequest gen;
  bool benchmark_gaussian = false;
  std::string cluster_spec;
  std::string blob_spec;
  auto* g = app.add_subcommand("generate", "Write a synthetic labelled dataset");
  g->add_flag("--paper-gaussian", benchmark_gaussian, "Four 200-point Gaussian classes A-D");
  g->add_option("--clusters", cluster_spec, "LABEL:mx,my,sd,count[;...]");
  g->add_option("--blobs", blob_spec, "N:K:DIM:SD high-dimensional blobs");
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("-o,--output", gen.output, "Dataset path")->required();

  // run
  RunRequest req;
  RunFlags rf;
  auto* r = app.add_subcommand("run", "Run a simulation and write its outputs");
  r->add_option("dataset", req.dataset_path, "Dataset file (comma or tab separated)");
  r->add_option("--manifest", rf.manifest, "Re-run exactly what a manifest.json records");
  r->add_option("--type", rf.type, "Probability function type 1-4")->check(CLI::Range(1, 4));
  r->add_option("--k1", req.cfg.k1, "Drop/pick threshold constant k1");
  r->add_option("--k2", rf.k2, "Threshold constant k2 (default 0.3, or 0.15 for type 4)");
  r->add_option("--beta", req.cfg.beta, "Osmotropotaxis sensitivity");
  r->add_option("--gamma", req.cfg.gamma, "Inverse sensory capacity");
  r->add_option("--eta", req.cfg.eta, "Base pheromone deposit");
  r->add_option("--kevap", req.cfg.k_evap, "Evaporation rate per step");
  r->add_option("--pdep", req.cfg.p_dep, "Extra deposit per neighbouring item");
  r->add_option("--theta", req.cfg.theta_count, "Count threshold of chi");
  r->add_option("--steepness", req.cfg.steepness, "Exponent of chi");
  r->add_option("--tmax", req.cfg.t_max, "Number of steps");
  r->add_option("--lf-alpha", req.cfg.lf_alpha, "Lumer-Faieta dissimilarity scale");
  r->add_option("--lf-s", req.cfg.lf_s, "Lumer-Faieta window side (odd)");
  r->add_option("--side", req.cfg.grid_side, "Grid side length");
  r->add_option("--agents", req.cfg.n_agents, "Number of agents");
  r->add_flag("--auto-size", req.auto_size, "Size grid and colony from the item count");
  r->add_option("--seed", req.cfg.seed, "Random seed");
  r->add_option("--drain-cap", req.cfg.drain_cap, "Max extra steps for laden agents");
  r->add_flag("--random-order", req.cfg.random_order, "Shuffle agent order every step");
  r->add_flag("--label-column", req.load.label_column, "Last column is a class label");
  r->add_option("--entropy-every", req.entropy_every, "Entropy sampling interval (0 = off)");
  r->add_option("--snapshots", req.snapshot_steps, "Steps to snapshot")->delimiter(',');
  r->add_flag("--svg", req.svg, "Also write SVG snapshots");
  r->add_option("--carried", rf.carried, "Carried items in entropy: exclude|carrier")
      ->check(CLI::IsMember({"exclude", "carrier"}));
  r->add_option("--connectivity", rf.connectivity, "Cluster connectivity 4 or 8")
      ->check(CLI::IsMember({4, 8}));
  r->add_flag("!--no-invariant-checks", req.check_invariants,
              "Skip conservation checks at entropy samples");
  r->add_option("-o,--out", req.out_dir, "Output directory ($ACLUSTER_OUT_DIR or acluster_out)");

  // compare
  std::vector<std::string> series;
  std::string merged = "compare.csv";
  auto* c = app.add_subcommand("compare", "Merge entropy series and rank final entropy");
  c->add_option("entropy", series, "entropy.csv files")->required();
  c->add_option("-o,--out", merged, "Merged CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (g->parsed()) {
      const int chosen = int(benchmark_gaussian) + int(!cluster_spec.empty()) + int(!blob_spec.empty());
      if (chosen != 1)
        throw UsageError("give exactly one of --paper-gaussian, --clusters, --blobs");
      if (benchmark_gaussian) gen.gaussian = GaussianSpec::benchmark_default();
      if (!cluster_spec.empty()) gen.gaussian = parse_cluster_spec(cluster_spec);
      if (!blob_spec.empty()) gen.blobs = parse_blob_spec(blob_spec);
      cmd_generate(gen);
      std::cout << "wrote " << gen.output << '\n';
    } else if (r->parsed()) {
      if (!rf.manifest.empty()) {
        const std::string out = req.out_dir;
        req = request_from_manifest(rf.manifest);
        req.out_dir = out;
      } else {
        req.cfg.function_type = parse_function_type(rf.type);
        req.cfg.k2 = rf.k2.value_or(req.cfg.function_type == FunctionType::Type4 ? 0.15 : 0.3);
        req.carried = rf.carried == "carrier" ? CarriedPolicy::AtCarrier : CarriedPolicy::Exclude;
        req.connectivity = rf.connectivity == 4 ? Connectivity::Four : Connectivity::Eight;
      }
      const RunSummary s = cmd_run(req);
      std::cout << "grid " << s.effective.cfg.grid_side << 'x' << s.effective.cfg.grid_side
                << ", " << s.effective.cfg.n_agents << " agents, type "
                << to_string(s.effective.cfg.function_type) << '\n'
                << "E_total: " << s.initial_entropy << " -> " << s.final_entropy << '\n'
                << "clusters: " << s.clusters.n_clusters << ", drain steps: " << s.drain_steps
                << ", forced placements: " << s.forced_placements << '\n'
                << "outputs in " << s.effective.out_dir << '\n';
    } else if (c->parsed()) {
      cmd_compare(series, merged, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "acluster: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitOk;
}
