#pragma once

// Command implementations behind the `acluster` executable. They live in the
// library so tests can drive them without spawning processes.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "acluster/config.hpp"
#include "acluster/core.hpp"
#include "acluster/datasets.hpp"
#include "acluster/engine.hpp"
#include "acluster/metrics.hpp"

namespace acluster {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitIo = 3,
  kExitConfig = 4,
  kExitInternal = 5,
};

/// Maps an exception to its exit code.
int exit_code_for(const std::exception& e) noexcept;

/// Output directory used when none is given: $ACLUSTER_OUT_DIR, else "acluster_out".
std::string default_output_dir();

struct BlobArgs {
  int n_items = 0;
  int n_clusters = 0;
  int dim = 0;
  double stddev = 0.0;
};

struct GenerateRequest {
  std::optional<GaussianSpec> gaussian;
  std::optional<BlobArgs> blobs;
  std::uint64_t seed = 0;
  std::string output;  // dataset path; manifest goes to <output>.manifest.json
};

/// "LABEL:mx,my,sd,count" entries separated by ';'.
GaussianSpec parse_cluster_spec(const std::string& text);
/// "N:K:DIM:SD".
BlobArgs parse_blob_spec(const std::string& text);

void cmd_generate(const GenerateRequest& req);

struct RunRequest {
  SimConfig cfg;
  std::string dataset_path;
  LoadOptions load;
  bool auto_size = false;
  std::string out_dir;
  std::int64_t entropy_every = 1000;
  std::vector<std::int64_t> snapshot_steps{1, 10'000, 100'000, 1'000'000};
  bool svg = false;
  CarriedPolicy carried = CarriedPolicy::Exclude;
  Connectivity connectivity = Connectivity::Eight;
  /// Re-check conservation and agent exclusion at every entropy sample.
  bool check_invariants = true;
};

struct RunSummary {
  RunRequest effective;          // after auto-sizing
  double initial_entropy = 0.0;  // E_total at t = 0
  double final_entropy = 0.0;    // E_total after drain
  ClusterReport clusters;
  std::int64_t drain_steps = 0;
  std::size_t forced_placements = 0;
  std::vector<std::string> outputs;  // relative to out_dir
};

/// Writes entropy.csv, snapshots/t<step>.ppm (t = 0, each configured step
/// <= t_max, and final.ppm after drain), clusters.txt and manifest.json.
/// Extra observers run alongside the built-in ones.
RunSummary cmd_run(const RunRequest& req, const std::vector<Observer>& extra = {});

/// Rebuilds the request recorded in a manifest and checks the dataset digest.
RunRequest request_from_manifest(const std::string& manifest_path);

struct CompareRow {
  std::string name;
  double final_total = 0.0;
};

/// Merges E_total columns on a shared t grid into `merged_csv` and returns
/// runs ranked by final E_total, lowest first. Throws AlignmentError when
/// step grids differ.
std::vector<CompareRow> cmd_compare(const std::vector<std::string>& entropy_paths,
                                    const std::string& merged_csv, std::ostream& table);

}  // namespace acluster
