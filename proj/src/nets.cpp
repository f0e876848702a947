#include "qmet/nets.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "qmet/rng.hpp"

namespace qmet {

EpsNet greedy_eps_net(const QuasiMetricSpace& space, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("greedy_eps_net: eps must be positive");
  const Eigen::Index n = space.size();
  EpsNet net;
  net.eps = eps;
  net.assignment.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index p = 0; p < n; ++p) {
    PointId assigned = -1;
    double dist = 0.0;
    for (PointId c : net.centers) {
      if (space(c, p) < eps) {
        assigned = c;
        dist = space(c, p);
        break;
      }
    }
    if (assigned < 0) {
      net.centers.push_back(p);
      assigned = p;
      dist = 0.0;
    }
    net.assignment.push_back({p, assigned, dist});
  }
  return net;
}

NetCheck verify_net(const QuasiMetricSpace& space, const EpsNet& net) {
  const Eigen::Index n = space.size();
  if (!(net.eps > 0.0)) return {false, std::nullopt, "eps must be positive"};
  std::unordered_set<PointId> centers(net.centers.begin(), net.centers.end());
  for (PointId c : net.centers)
    if (c < 0 || c >= n) return {false, std::nullopt, "center out of range"};

  for (Eigen::Index p = 0; p < n; ++p) {
    if (static_cast<std::size_t>(p) >= net.assignment.size())
      return {false, p, "point has no assignment entry"};
    const NetAssignment& a = net.assignment[static_cast<std::size_t>(p)];
    if (a.point != p) return {false, p, "assignment entries out of order"};
    if (!centers.count(a.center)) return {false, p, "assigned center not in center list"};
    const double recomputed = space(a.center, p);
    if (!(recomputed < net.eps)) return {false, p, "d(center, point) is not below eps"};
    if (recomputed != a.dist) return {false, p, "recorded distance is stale"};
  }
  if (net.assignment.size() != static_cast<std::size_t>(n))
    return {false, std::nullopt, "assignment lists unknown points"};
  return {true, std::nullopt, ""};
}

CirclePaperNet paper_net_circle(Eigen::Index n_points, double eps) {
  if (n_points < 1) throw std::invalid_argument("paper_net_circle: N must be at least 1");
  if (!(eps > 0.0)) throw std::invalid_argument("paper_net_circle: eps must be positive");
  const QuasiMetricSpace space = circle_example(n_points);

  CirclePaperNet result;
  std::vector<PointId> centers_all;

  // parity 1 = odd 1-based indices (2N-1), parity 0 = even (2N)
  for (int parity : {1, 0}) {
    std::vector<PointId> class_points;
    for (Eigen::Index idx = 0; idx < n_points; ++idx)
      if ((idx + 1) % 2 == parity) class_points.push_back(idx);

    // Phase 1: greedy net of the class under the symmetric chord metric.
    std::vector<PointId> euclid;
    for (PointId q : class_points) {
      bool covered = false;
      for (PointId c : euclid)
        if (circle_chord(c + 1, q + 1) < eps) {
          covered = true;
          break;
        }
      if (!covered) euclid.push_back(q);
    }

    // Phase 2: class points no chosen center reaches in the forward
    // quasi-distance (their index is below every covering center) become
    // their own centers.
    for (PointId q : class_points) {
      bool quasi_covered = false;
      for (PointId c : euclid)
        if (space(c, q) < eps) {
          quasi_covered = true;
          break;
        }
      if (!quasi_covered) result.exceptional_points.push_back(q);
    }

    result.euclidean_centers.insert(result.euclidean_centers.end(), euclid.begin(),
                                    euclid.end());
  }

  centers_all = result.euclidean_centers;
  centers_all.insert(centers_all.end(), result.exceptional_points.begin(),
                     result.exceptional_points.end());
  std::sort(centers_all.begin(), centers_all.end());
  std::sort(result.euclidean_centers.begin(), result.euclidean_centers.end());
  std::sort(result.exceptional_points.begin(), result.exceptional_points.end());

  EpsNet& net = result.net;
  net.eps = eps;
  net.centers = centers_all;
  net.assignment.reserve(static_cast<std::size_t>(n_points));
  std::vector<bool> is_center(static_cast<std::size_t>(n_points), false);
  for (PointId c : centers_all) is_center[static_cast<std::size_t>(c)] = true;
  for (Eigen::Index p = 0; p < n_points; ++p) {
    if (is_center[static_cast<std::size_t>(p)]) {
      net.assignment.push_back({p, p, 0.0});
      continue;
    }
    PointId assigned = -1;
    for (PointId c : centers_all)
      if (space(c, p) < eps) {
        assigned = c;
        break;
      }
    if (assigned < 0)
      throw std::logic_error("paper_net_circle: construction left a point uncovered");
    net.assignment.push_back({p, assigned, space(assigned, p)});
  }
  return result;
}

ProbeReport probe_subsets(const QuasiMetricSpace& space, double eps,
                          std::span<const std::vector<PointId>> subsets) {
  if (!(eps > 0.0)) throw std::invalid_argument("probe_subsets: eps must be positive");
  ProbeReport report;
  report.eps = eps;
  for (std::size_t t = 0; t < subsets.size(); ++t) {
    const QuasiMetricSpace sub = subspace(space, subsets[t]);
    const EpsNet net = greedy_eps_net(sub, eps);
    const NetCheck check = verify_net(sub, net);
    const auto net_size = static_cast<Eigen::Index>(net.centers.size());
    report.trials.push_back({sub.size(), net_size, check.ok});
    report.max_net_size = std::max(report.max_net_size, net_size);
    if (!check.ok && report.all_passed) {
      report.all_passed = false;
      report.first_failure_trial = t;
      report.first_failure_point = check.first_uncovered;
    }
  }
  return report;
}

ProbeReport hereditary_probe(const QuasiMetricSpace& space, double eps, int trials,
                             std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("hereditary_probe: trials must be positive");
  const Eigen::Index n = space.size();
  Rng rng = seeded_rng(seed);
  std::vector<std::vector<PointId>> subsets;
  subsets.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    const auto size =
        static_cast<Eigen::Index>(1 + rand_below(rng, static_cast<std::uint64_t>(n)));
    subsets.push_back(sample_points(rng, n, size));
  }
  ProbeReport report = probe_subsets(space, eps, subsets);
  report.seed = seed;
  return report;
}

}  // namespace qmet
