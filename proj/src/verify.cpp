#include "qmet/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qmet {

namespace {

std::string summarize(const ViolationReport& report) {
  std::string msg = "axiom validation failed: " +
                    std::to_string(report.total_violations) + " violation(s)";
  if (!report.violations.empty()) {
    const Violation& v = report.violations.front();
    msg += ", first: axiom ";
    msg += static_cast<char>(v.axiom);
    msg += " at (";
    for (std::size_t k = 0; k < v.points.size(); ++k) {
      if (k) msg += ",";
      msg += std::to_string(v.points[k]);
    }
    msg += ")";
  }
  return msg;
}

}  // namespace

ValidationError::ValidationError(ViolationReport report)
    : std::runtime_error(summarize(report)), report_(std::move(report)) {}

ViolationReport check_axioms(const QuasiMetricSpace& space, double tol,
                             std::size_t max_listed) {
  if (tol < 0.0) throw std::invalid_argument("check_axioms: tol must be nonnegative");
  const auto& d = space.distances();
  const Eigen::Index n = space.size();

  ViolationReport report;
  const auto un = static_cast<std::uint64_t>(n);
  report.scanned_triples = un * un * un;

  auto add = [&](Axiom axiom, std::vector<PointId> points, double lhs, double rhs) {
    ++report.total_violations;
    if (report.violations.size() < max_listed)
      report.violations.push_back({axiom, std::move(points), lhs, rhs});
  };

  for (Eigen::Index i = 0; i < n; ++i)
    if (d(i, i) != 0.0) add(Axiom::Identity, {i}, d(i, i), 0.0);

  for (Eigen::Index x = 0; x < n; ++x) {
    for (Eigen::Index y = 0; y < n; ++y) {
      const double dxy = d(x, y);
      for (Eigen::Index z = 0; z < n; ++z) {
        const double lhs = d(x, z);
        const double rhs = dxy + d(y, z);
        if (lhs > rhs + tol) add(Axiom::Triangle, {x, y, z}, lhs, rhs);
      }
    }
  }

  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j && d(i, j) <= 0.0) add(Axiom::Positivity, {i, j}, d(i, j), 0.0);

  return report;
}

double asymmetry_omega(const QuasiMetricSpace& space, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("asymmetry_omega: delta must be positive");
  const auto& d = space.distances();
  const Eigen::Index n = space.size();
  double omega = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j && d(i, j) < delta) omega = std::max(omega, d(j, i));
  return omega;
}

namespace {

struct ConstantC {
  double value = 1.0;
  bool infinite = false;
};

ConstantC compute_constant(const QuasiMetricSpace& space) {
  const auto& d = space.distances();
  const Eigen::Index n = space.size();
  ConstantC c;
  if (n < 2) return c;
  c.value = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const double fwd = d(i, j);
      const double rev = d(j, i);
      if (rev > 0.0)
        c.value = std::max(c.value, fwd / rev);
      else if (fwd > 0.0)
        c.infinite = true;
      // fwd == rev == 0 constrains nothing (degenerate unvalidated input)
    }
  return c;
}

}  // namespace

AsymmetryProfile asymmetry_profile(const QuasiMetricSpace& space,
                                   std::span<const double> deltas) {
  AsymmetryProfile profile;
  profile.samples.reserve(deltas.size());
  for (double delta : deltas)
    profile.samples.push_back({delta, asymmetry_omega(space, delta)});
  const ConstantC c = compute_constant(space);
  profile.constant_C = c.value;
  profile.c_infinite = c.infinite;
  return profile;
}

double asymmetric_pair_fraction(const QuasiMetricSpace& space) {
  const auto& d = space.distances();
  const Eigen::Index n = space.size();
  if (n < 2) return 0.0;
  std::uint64_t asym = 0, pairs = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      ++pairs;
      if (d(i, j) != d(j, i)) ++asym;
    }
  return static_cast<double>(asym) / static_cast<double>(pairs);
}

CorollaryHypotheses check_corollary_hypotheses(const QuasiMetricSpace& space,
                                               double eps,
                                               std::span<const double> grid) {
  if (!(eps > 0.0))
    throw std::invalid_argument("check_corollary_hypotheses: eps must be positive");

  std::vector<double> default_grid;
  if (grid.empty()) {
    default_grid.reserve(41);
    double delta = eps;
    for (int k = 0; k <= 40; ++k, delta *= 0.5) default_grid.push_back(delta);
    grid = default_grid;
  }

  CorollaryHypotheses result;
  result.eps = eps;
  for (double delta : grid) {
    if (asymmetry_omega(space, delta) < eps) {
      if (!result.cor1_delta || delta > *result.cor1_delta) result.cor1_delta = delta;
    }
  }

  const ConstantC c = compute_constant(space);
  result.cor2_C = c.value;
  result.c_infinite = c.infinite;

  if (!c.infinite && c.value > 0.0) {
    // Condition "d(x,y) < delta => d(y,x) < eps" at delta = eps / C, the
    // reduction used to derive the delta from the constant.
    const double delta = eps / c.value;
    const auto& d = space.distances();
    bool holds = true;
    for (Eigen::Index i = 0; holds && i < space.size(); ++i)
      for (Eigen::Index j = 0; j < space.size(); ++j) {
        if (i == j) continue;
        if (d(i, j) < delta && !(d(j, i) < eps)) {
          holds = false;
          break;
        }
      }
    result.reduction_holds = holds;
  }
  return result;
}

}  // namespace qmet
