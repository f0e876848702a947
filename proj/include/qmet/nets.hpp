#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmet/space.hpp"

namespace qmet {

struct NetAssignment {
  PointId point = 0;
  PointId center = 0;
  double dist = 0.0;  // d(center, point)
};

/// Covering certificate: centers are points of the space, and every point
/// has an assigned center at forward distance strictly below eps. The
/// covering direction is always d(center, point), matching the d-ball.
struct EpsNet {
  double eps = 0.0;
  std::vector<PointId> centers;
  std::vector<NetAssignment> assignment;  // entry k describes point k
};

struct NetCheck {
  bool ok = false;
  std::optional<PointId> first_uncovered;
  std::string reason;
};

/// Greedy in ascending point order: a point not covered by any chosen
/// center becomes one itself. Deterministic for a given space.
EpsNet greedy_eps_net(const QuasiMetricSpace& space, double eps);

/// Recomputes every assignment entry against the space; reports the first
/// point whose certificate fails.
NetCheck verify_net(const QuasiMetricSpace& space, const EpsNet& net);

struct CirclePaperNet {
  EpsNet net;
  std::vector<PointId> euclidean_centers;
  std::vector<PointId> exceptional_points;
};

/// Two-phase construction for circle_example(N), one parity class at a
/// time: first a greedy net of the class under the symmetric chord metric,
/// then every class point that the chord balls reach but the forward balls
/// miss (those with index below every covering center) is added as its own
/// center. The union over both classes is a valid net for the truncation.
CirclePaperNet paper_net_circle(Eigen::Index n_points, double eps);

struct ProbeTrial {
  Eigen::Index subset_size = 0;
  Eigen::Index net_size = 0;
  bool passed = false;
};

struct ProbeReport {
  double eps = 0.0;
  std::uint64_t seed = 0;
  bool all_passed = true;
  Eigen::Index max_net_size = 0;
  std::vector<ProbeTrial> trials;
  std::optional<std::size_t> first_failure_trial;
  std::optional<PointId> first_failure_point;  // id within the subspace
};

/// Builds and certifies a greedy net inside each induced subspace.
ProbeReport probe_subsets(const QuasiMetricSpace& space, double eps,
                          std::span<const std::vector<PointId>> subsets);

/// Seeded random subsets: size uniform in [1, n], then that many distinct
/// points. Reports max net size and any certificate failure.
ProbeReport hereditary_probe(const QuasiMetricSpace& space, double eps,
                             int trials, std::uint64_t seed);

}  // namespace qmet
