#pragma once

#include <cstdint>
#include <random>

namespace acluster {

using Rng = std::mt19937_64;

/// Uniform real in [0,1) built from the top 53 bits of one engine draw.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n). n must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

}  // namespace acluster
