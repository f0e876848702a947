#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qmet/space.hpp"

namespace qmet {

// Sequence positions are 1-based subscripts into the prefix, so the tail
// condition reads exactly as usual: d(x_n, x_m) < eps for all m >= n >= start.

struct KCauchyViolation {
  Eigen::Index n = 0;  // positions, 1-based
  Eigen::Index m = 0;
  double dist = 0.0;
};

struct KCauchyCheck {
  bool holds = true;
  std::optional<KCauchyViolation> first_violation;
};

/// Left variant: d(x_n, x_m) < eps for all m >= n >= start within the
/// prefix. Repeated points are allowed. start must lie in [1, length].
KCauchyCheck is_left_k_cauchy_at(const QuasiMetricSpace& space,
                                 std::span<const PointId> prefix, double eps,
                                 Eigen::Index start);

/// Right variant: the same tail condition with arguments swapped,
/// d(x_m, x_n) < eps. Identical to the left variant on the conjugate space.
KCauchyCheck is_right_k_cauchy_at(const QuasiMetricSpace& space,
                                  std::span<const PointId> prefix, double eps,
                                  Eigen::Index start);

/// Greedy anchor-and-filter search for positions i_1 < ... < i_k with
/// k = min_len and d(x_{i_a}, x_{i_b}) < eps for all a <= b: each anchor in
/// turn keeps subsequent positions whose forward distance from all kept
/// points stays below eps; the first chain reaching min_len wins. An empty
/// result means the greedy rule found no chain, not that none exists.
std::optional<std::vector<Eigen::Index>> extract_left_k_cauchy(
    const QuasiMetricSpace& space, std::span<const PointId> prefix, double eps,
    Eigen::Index min_len);

/// Exhaustively checks d(x_{i_a}, x_{i_b}) < eps over all ordered a <= b.
/// positions must be strictly increasing and within [1, length].
bool certify_subsequence(const QuasiMetricSpace& space,
                         std::span<const PointId> prefix,
                         std::span<const Eigen::Index> positions, double eps);

/// The prefix p_1..p_M of a space: point ids 0..M-1.
std::vector<PointId> range_prefix(Eigen::Index m);

}  // namespace qmet
