#pragma once

#include <cstdint>
#include <string>

namespace acluster {

/// Pick/drop probability families. Types 1-3 compose the count threshold
/// (chi) with the similarity thresholds (delta, epsilon); type 4 is the
/// Lumer-Faieta local-density rule.
enum class FunctionType : int { Type1 = 1, Type2 = 2, Type3 = 3, Type4 = 4 };

/// Which half of a mixed population (types 2 and 3) an agent belongs to.
enum class SubAssignment : int { A = 0, B = 1 };

/// How items held by agents are treated when measuring entropy mid-run.
enum class CarriedPolicy : int {
  Exclude = 0,  ///< carried items are absent from the grid and from n
  AtCarrier = 1 ///< carried item counts as sitting on its carrier's cell when that cell is free
};

struct SimConfig {
  double k1 = 0.1;
  double k2 = 0.3;
  double beta = 3.5;
  double gamma = 0.2;
  double eta = 0.07;
  double k_evap = 0.015;
  double p_dep = 0.0025;  // 1/400
  double theta_count = 5.0;
  double steepness = 2.0;
  std::int64_t t_max = 1'000'000;
  FunctionType function_type = FunctionType::Type1;
  double lf_alpha = 0.5;
  int lf_s = 3;
  int grid_side = 57;
  int n_agents = 80;
  std::uint64_t seed = 0;
  std::int64_t drain_cap = 100'000;
  /// Shuffle agent order every step instead of acting in id order.
  bool random_order = false;

  /// Throws ConfigError naming the first violated constraint.
  void validate() const;
};

std::string to_string(FunctionType t);
FunctionType parse_function_type(int v);

}  // namespace acluster
