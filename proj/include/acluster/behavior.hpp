#pragma once

#include "acluster/config.hpp"
#include "acluster/core.hpp"
#include "acluster/grid.hpp"

namespace acluster {

struct PickDrop {
  double pick = 0.0;
  double drop = 0.0;
};

/// Response threshold on the neighbour count: n^s / (n^s + theta^s).
double chi(int n_items, double theta_count = 5.0, double steepness = 2.0);

/// Drop threshold on similarity: (k1 / (k1 + d))^2.
double delta_drop(double d, double k1);

/// Pick threshold on dissimilarity: (d / (k2 + d))^2.
double epsilon_pick(double d, double k2);

/// Table of hybrid pick/drop rules for function types 1-3. Type 1 ignores
/// the sub-assignment. Type 4 throws MisuseError; use lf_probabilities.
PickDrop compose_probabilities(FunctionType type, SubAssignment sub, double chi_val,
                               double eps_val, double delta_val);

/// Lumer-Faieta local density of `item` as if it sat at `pos`: the mean of
/// 1 - d/alpha over items in the s x s window (centre excluded), divided by
/// s^2 and floored at 0. Negative per-pair terms are summed before the floor.
double lf_local_density(const Grid& grid, Coord pos, ItemId item, const Dataset& data, int s,
                        double alpha);

/// pick = (k1/(k1+f))^2; drop = 2f below k2, else 1 (clamped to [0,1]).
PickDrop lf_probabilities(double f, double k1, double k2);

/// Reference evaluator for the basic corpse-clustering model:
/// pick = (k1/(k1+f))^2, drop = (f/(k2+f))^2.
PickDrop bm_probabilities(double f_fraction, double k1, double k2);

}  // namespace acluster
