#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qmet/space.hpp"

namespace qmet {

enum class Axiom : char { Identity = 'A', Triangle = 'B', Positivity = 'C' };

struct Violation {
  Axiom axiom = Axiom::Identity;
  std::vector<PointId> points;  // 1 id for A, 3 for B, 2 for C
  double lhs = 0.0;
  double rhs = 0.0;
};

struct ViolationReport {
  std::vector<Violation> violations;   // listing, capped at max_listed
  std::uint64_t total_violations = 0;  // exact count, never capped
  std::uint64_t scanned_triples = 0;
  bool passed() const { return total_violations == 0; }
};

/// Scans all n diagonal entries (A: d(x,x) = 0, exact), all n^3 ordered
/// triples (B: d(x,z) <= d(x,y) + d(y,z) + tol, additive tolerance) and all
/// off-diagonal entries (C: d(x,y) > 0, exact). Violations are data, not
/// errors. tol may be 0 for exactly-representable value grids.
ViolationReport check_axioms(const QuasiMetricSpace& space,
                             double tol = kDefaultTol,
                             std::size_t max_listed = 100);

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ViolationReport report);
  const ViolationReport& report() const { return report_; }

 private:
  ViolationReport report_;
};

/// omega(delta) = max{ d(y,x) : d(x,y) < delta, x != y }, or 0 when no pair
/// qualifies (the condition is then vacuous). Nondecreasing in delta.
double asymmetry_omega(const QuasiMetricSpace& space, double delta);

struct AsymmetrySample {
  double delta = 0.0;
  double omega = 0.0;
};

struct AsymmetryProfile {
  std::vector<AsymmetrySample> samples;
  /// max d(x,y)/d(y,x) over pairs of distinct points with d(y,x) > 0;
  /// 1 for a one-point space.
  double constant_C = 1.0;
  /// Some pair has d(y,x) = 0 with d(x,y) > 0. Impossible once validated;
  /// retained for unvalidated input.
  bool c_infinite = false;
};

AsymmetryProfile asymmetry_profile(const QuasiMetricSpace& space,
                                   std::span<const double> deltas);

/// Fraction of unordered pairs {x,y} with d(x,y) != d(y,x).
double asymmetric_pair_fraction(const QuasiMetricSpace& space);

struct CorollaryHypotheses {
  double eps = 0.0;
  /// Largest grid delta with omega(delta) < eps, if any.
  std::optional<double> cor1_delta;
  double cor2_C = 1.0;
  bool c_infinite = false;
  /// Whether d(x,y) < eps/C implies d(y,x) < eps over all pairs; empty when
  /// C is flagged infinite.
  std::optional<bool> reduction_holds;
};

/// Grid defaults to {eps * 2^-k : k = 0..40}.
CorollaryHypotheses check_corollary_hypotheses(const QuasiMetricSpace& space,
                                               double eps,
                                               std::span<const double> grid = {});

}  // namespace qmet
