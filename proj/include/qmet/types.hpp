#pragma once

#include <Eigen/Core>

namespace qmet {

/// 0-based index of a point within a space.
using PointId = Eigen::Index;

/// Dense asymmetric distance matrix; entry (i, j) holds d(p_i, p_j).
/// Row-major so that row i is the forward-distance profile of point i.
using DistanceMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Additive comparison tolerance used by the numeric checks.
inline constexpr double kDefaultTol = 1e-9;

}  // namespace qmet
