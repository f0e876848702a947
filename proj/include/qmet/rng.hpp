#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "qmet/types.hpp"

namespace qmet {

// mt19937_64 raw output is pinned by the standard; the bounded draws below
// are hand-rolled because std distributions are implementation-defined and
// would break cross-platform reproducibility of seeded runs.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Deterministic engine for (seed, stream).
inline Rng seeded_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  return Rng(splitmix64(seed + 0x9E3779B97F4A7C15ull * stream));
}

/// Uniform in {0, ..., n-1}; modulo bias is negligible at the sizes used here.
inline std::uint64_t rand_below(Rng& rng, std::uint64_t n) { return rng() % n; }

/// Uniform in {lo, ..., hi}.
inline std::int64_t rand_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo +
         static_cast<std::int64_t>(rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// Uniform in [0, 1), 53-bit resolution.
inline double rand_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform in (0, hi].
inline double rand_positive(Rng& rng, double hi) { return hi * (1.0 - rand_unit(rng)); }

/// k distinct ids out of {0..n-1}, ascending.
inline std::vector<PointId> sample_points(Rng& rng, Eigen::Index n, Eigen::Index k) {
  std::vector<PointId> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), PointId{0});
  for (Eigen::Index i = 0; i < k; ++i) {
    const auto j = i + static_cast<Eigen::Index>(rand_below(rng, static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(k));
  std::sort(pool.begin(), pool.end());
  return pool;
}

/// Fisher-Yates permutation of {0..n-1}.
inline std::vector<PointId> random_permutation(Rng& rng, Eigen::Index n) {
  std::vector<PointId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), PointId{0});
  for (Eigen::Index i = n - 1; i > 0; --i) {
    const auto j = static_cast<Eigen::Index>(rand_below(rng, static_cast<std::uint64_t>(i + 1)));
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  return perm;
}

}  // namespace qmet
