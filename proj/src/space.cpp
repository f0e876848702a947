#include "qmet/space.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qmet/verify.hpp"

namespace qmet {

namespace {

std::vector<std::string> default_labels(Eigen::Index n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i + 1));
  return labels;
}

}  // namespace

QuasiMetricSpace::QuasiMetricSpace(DistanceMatrix d, std::vector<std::string> labels,
                                   bool validated)
    : d_(std::move(d)), labels_(std::move(labels)), validated_(validated) {
  if (d_.rows() == 0 || d_.rows() != d_.cols())
    throw std::invalid_argument("QuasiMetricSpace: matrix must be square and nonempty");
  if (labels_.empty()) labels_ = default_labels(d_.rows());
  if (static_cast<Eigen::Index>(labels_.size()) != d_.rows())
    throw std::invalid_argument("QuasiMetricSpace: label count does not match size");
}

QuasiMetricSpace make_explicit(const DistanceMatrix& d, bool validate, double tol) {
  if (d.rows() != d.cols())
    throw std::invalid_argument("make_explicit: matrix is not square");
  if (!(tol > 0.0)) throw std::invalid_argument("make_explicit: tol must be positive");
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      const double v = d(i, j);
      if (std::isnan(v)) throw std::invalid_argument("make_explicit: NaN entry");
      if (v < 0.0) throw std::invalid_argument("make_explicit: negative entry");
      if (std::isinf(v)) throw std::invalid_argument("make_explicit: non-finite entry");
    }
  QuasiMetricSpace candidate(d, {}, false);
  if (!validate) return candidate;
  ViolationReport report = check_axioms(candidate, tol);
  if (!report.passed()) throw ValidationError(std::move(report));
  return QuasiMetricSpace(d, {}, true);
}

double circle_chord(std::int64_t n, std::int64_t m) {
  return 2.0 * std::abs(std::sin(0.5 * static_cast<double>(m - n)));
}

double circle_distance(std::int64_t n, std::int64_t m) {
  if (n == m) return 0.0;
  const bool same_parity = (m - n) % 2 == 0;
  if (same_parity && m > n) return circle_chord(n, m);
  if (n == 1 && m % 2 == 0) return 2.0;
  return 3.0;
}

QuasiMetricSpace circle_example(Eigen::Index n_points) {
  if (n_points < 1)
    throw std::invalid_argument("circle_example: N must be at least 1");
  DistanceMatrix d(n_points, n_points);
  for (Eigen::Index i = 0; i < n_points; ++i)
    for (Eigen::Index j = 0; j < n_points; ++j)
      d(i, j) = circle_distance(i + 1, j + 1);
  // The case rule provably satisfies the axioms; the verify tests re-scan
  // truncations anyway.
  return QuasiMetricSpace(std::move(d), {}, true);
}

QuasiMetricSpace conjugate(const QuasiMetricSpace& space) {
  DistanceMatrix t = space.distances().transpose();
  return QuasiMetricSpace(std::move(t), space.labels(), space.validated());
}

QuasiMetricSpace symmetrize(const QuasiMetricSpace& space) {
  DistanceMatrix s = space.distances() + space.distances().transpose();
  return QuasiMetricSpace(std::move(s), space.labels(), space.validated());
}

QuasiMetricSpace subspace(const QuasiMetricSpace& space, std::span<const PointId> keep) {
  if (keep.empty()) throw std::invalid_argument("subspace: empty selection");
  std::vector<bool> seen(static_cast<std::size_t>(space.size()), false);
  std::vector<PointId> ids;
  ids.reserve(keep.size());
  for (PointId id : keep) {
    if (id < 0 || id >= space.size())
      throw std::invalid_argument("subspace: point id out of range");
    if (seen[static_cast<std::size_t>(id)])
      throw std::invalid_argument("subspace: duplicate point id");
    seen[static_cast<std::size_t>(id)] = true;
    ids.push_back(id);
  }
  DistanceMatrix sub = space.distances()(ids, ids);
  std::vector<std::string> labels;
  labels.reserve(ids.size());
  for (PointId id : ids) labels.push_back(space.label(id));
  // Any triple of the subspace is a triple of the original space.
  return QuasiMetricSpace(std::move(sub), std::move(labels), space.validated());
}

std::vector<PointId> ball(const QuasiMetricSpace& space, PointId center, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("ball: eps must be positive");
  if (center < 0 || center >= space.size())
    throw std::invalid_argument("ball: center out of range");
  std::vector<PointId> members;
  for (Eigen::Index j = 0; j < space.size(); ++j)
    if (space(center, j) < eps) members.push_back(j);
  return members;
}

}  // namespace qmet
