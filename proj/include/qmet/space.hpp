#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qmet/types.hpp"

namespace qmet {

/// A finite quasi-metric space: a point set with an asymmetric distance d
/// where d(x,x) = 0, d(x,y) > 0 for x != y, and the triangle inequality
/// d(x,z) <= d(x,y) + d(y,z) holds. Instances are immutable after
/// construction and safe to share across threads; every operation on them
/// is a pure function of its inputs.
class QuasiMetricSpace {
 public:
  /// Takes ownership of a square matrix. Empty labels default to p1..pn.
  /// The validated flag records that a full axiom scan has passed (or that
  /// the construction rule guarantees the axioms); it is never set by this
  /// constructor on behalf of the caller.
  QuasiMetricSpace(DistanceMatrix d, std::vector<std::string> labels = {},
                   bool validated = false);

  Eigen::Index size() const { return d_.rows(); }

  /// Forward distance d(i, j).
  double operator()(PointId i, PointId j) const { return d_(i, j); }

  const DistanceMatrix& distances() const { return d_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(PointId i) const {
    return labels_[static_cast<std::size_t>(i)];
  }
  bool validated() const { return validated_; }

 private:
  DistanceMatrix d_;
  std::vector<std::string> labels_;
  bool validated_;
};

/// Wraps an explicit matrix as a space. Rejects non-square, negative and
/// non-finite input. With validate set, runs the full axiom scan and marks
/// the space validated only if it passes; a failing scan throws
/// ValidationError (verify.hpp) carrying the report.
QuasiMetricSpace make_explicit(const DistanceMatrix& d, bool validate,
                               double tol = kDefaultTol);

/// Chord length |e^{in} - e^{im}| = 2|sin((m - n)/2)|. Depends only on
/// m - n, so index shifts preserve it bit-exactly.
double circle_chord(std::int64_t n, std::int64_t m);

/// Case rule of the circle family, 1-based indices: the chord when n and m
/// share parity and m >= n; exactly 2 when n = 1 and m is even; exactly 3
/// otherwise.
double circle_distance(std::int64_t n, std::int64_t m);

/// Truncation of the circle family to points p_1..p_N; point p_k sits at
/// index k-1 with label "pk". Distances follow circle_distance, so every
/// value is 0, a chord in (0, 2], 2, or 3.
QuasiMetricSpace circle_example(Eigen::Index n_points);

/// Space with the transposed distance d'(x,y) = d(y,x). An involution.
QuasiMetricSpace conjugate(const QuasiMetricSpace& space);

/// Space with the symmetrized distance d(x,y) + d(y,x); a genuine metric
/// whenever the input satisfies the quasi-metric axioms.
QuasiMetricSpace symmetrize(const QuasiMetricSpace& space);

/// Induced space on the selected points. Rows/columns are copied, not
/// indirected; keep must be nonempty, duplicate-free and in range.
QuasiMetricSpace subspace(const QuasiMetricSpace& space,
                          std::span<const PointId> keep);

/// Forward ball: the points y with d(center, y) < eps, strictly. A point at
/// distance exactly eps is excluded.
std::vector<PointId> ball(const QuasiMetricSpace& space, PointId center,
                          double eps);

}  // namespace qmet
