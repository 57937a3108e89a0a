#pragma once

#include <cstdint>
#include <random>

namespace hecke {

/// Seeded engine used by every sampling operation. mt19937_64 is fully
/// specified by the standard, so seeded runs are reproducible across
/// platforms as long as we avoid the implementation-defined distributions.
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0xC05E7;

/// Uniform integer in [0, bound), bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % bound;
}

/// Uniform integer in [lo, hi].
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace hecke
