#include "acluster/behavior.hpp"

#include <algorithm>
#include <cmath>

namespace acluster {

namespace {
inline double sq(double v) { return v * v; }
}  // namespace

double chi(int n_items, double theta_count, double steepness) {
  if (n_items <= 0) return 0.0;
  const double s = std::pow(static_cast<double>(n_items), steepness);
  return s / (s + std::pow(theta_count, steepness));
}

double delta_drop(double d, double k1) { return sq(k1 / (k1 + d)); }

double epsilon_pick(double d, double k2) {
  if (d <= 0.0) return 0.0;
  return sq(d / (k2 + d));
}

PickDrop compose_probabilities(FunctionType type, SubAssignment sub, double chi_val,
                               double eps_val, double delta_val) {
  const PickDrop hybrid{(1.0 - chi_val) * eps_val, chi_val * delta_val};
  const PickDrop similarity_only{eps_val, delta_val};
  switch (type) {
    case FunctionType::Type1:
      return hybrid;
    case FunctionType::Type2:
      return sub == SubAssignment::A ? hybrid : similarity_only;
    case FunctionType::Type3:
      return sub == SubAssignment::A ? PickDrop{1.0 - chi_val, chi_val} : similarity_only;
    case FunctionType::Type4:
      break;
  }
  throw MisuseError("function type #4 uses the Lumer-Faieta rule, not the hybrid table");
}

double lf_local_density(const Grid& grid, Coord pos, ItemId item, const Dataset& data, int s,
                        double alpha) {
  const int half = s / 2;
  double acc = 0.0;
  for (int dy = -half; dy <= half; ++dy)
    for (int dx = -half; dx <= half; ++dx) {
      if (dx == 0 && dy == 0) continue;
      const auto other = grid.item_at(grid.wrap(pos.x + dx, pos.y + dy));
      if (!other) continue;
      acc += 1.0 - data.distance(item, *other) / alpha;
    }
  return std::max(0.0, acc / static_cast<double>(s * s));
}

PickDrop lf_probabilities(double f, double k1, double k2) {
  const double drop = f < k2 ? std::clamp(2.0 * f, 0.0, 1.0) : 1.0;
  return {sq(k1 / (k1 + f)), drop};
}

PickDrop bm_probabilities(double f_fraction, double k1, double k2) {
  return {sq(k1 / (k1 + f_fraction)), f_fraction > 0.0 ? sq(f_fraction / (k2 + f_fraction)) : 0.0};
}

}  // namespace acluster
