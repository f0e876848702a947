#include "qmet/sequences.hpp"

#include <numeric>
#include <stdexcept>

namespace qmet {

namespace {

void check_prefix(const QuasiMetricSpace& space, std::span<const PointId> prefix) {
  for (PointId id : prefix)
    if (id < 0 || id >= space.size())
      throw std::invalid_argument("sequence prefix: point id out of range");
}

PointId at(std::span<const PointId> prefix, Eigen::Index pos) {  // pos is 1-based
  return prefix[static_cast<std::size_t>(pos - 1)];
}

KCauchyCheck tail_check(const QuasiMetricSpace& space, std::span<const PointId> prefix,
                        double eps, Eigen::Index start, bool swapped) {
  check_prefix(space, prefix);
  const auto len = static_cast<Eigen::Index>(prefix.size());
  if (!(eps > 0.0)) throw std::invalid_argument("k-cauchy check: eps must be positive");
  if (start < 1 || start > len)
    throw std::invalid_argument("k-cauchy check: start must lie in [1, length]");
  for (Eigen::Index n = start; n <= len; ++n) {
    for (Eigen::Index m = n; m <= len; ++m) {
      const double dist = swapped ? space(at(prefix, m), at(prefix, n))
                                  : space(at(prefix, n), at(prefix, m));
      if (!(dist < eps)) return {false, KCauchyViolation{n, m, dist}};
    }
  }
  return {true, std::nullopt};
}

}  // namespace

KCauchyCheck is_left_k_cauchy_at(const QuasiMetricSpace& space,
                                 std::span<const PointId> prefix, double eps,
                                 Eigen::Index start) {
  return tail_check(space, prefix, eps, start, false);
}

KCauchyCheck is_right_k_cauchy_at(const QuasiMetricSpace& space,
                                  std::span<const PointId> prefix, double eps,
                                  Eigen::Index start) {
  return tail_check(space, prefix, eps, start, true);
}

std::optional<std::vector<Eigen::Index>> extract_left_k_cauchy(
    const QuasiMetricSpace& space, std::span<const PointId> prefix, double eps,
    Eigen::Index min_len) {
  check_prefix(space, prefix);
  if (!(eps > 0.0))
    throw std::invalid_argument("extract_left_k_cauchy: eps must be positive");
  if (min_len < 2)
    throw std::invalid_argument("extract_left_k_cauchy: min_len must be at least 2");
  const auto len = static_cast<Eigen::Index>(prefix.size());

  std::vector<Eigen::Index> chain;
  for (Eigen::Index anchor = 1; anchor + min_len - 1 <= len; ++anchor) {
    chain.clear();
    chain.push_back(anchor);
    for (Eigen::Index b = anchor + 1; b <= len; ++b) {
      bool keep = true;
      for (Eigen::Index kept : chain) {
        if (!(space(at(prefix, kept), at(prefix, b)) < eps)) {
          keep = false;
          break;
        }
      }
      if (keep) {
        chain.push_back(b);
        if (static_cast<Eigen::Index>(chain.size()) == min_len) return chain;
      }
    }
  }
  return std::nullopt;
}

bool certify_subsequence(const QuasiMetricSpace& space, std::span<const PointId> prefix,
                         std::span<const Eigen::Index> positions, double eps) {
  check_prefix(space, prefix);
  const auto len = static_cast<Eigen::Index>(prefix.size());
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (positions[k] < 1 || positions[k] > len)
      throw std::invalid_argument("certify_subsequence: position out of range");
    if (k > 0 && positions[k] <= positions[k - 1])
      throw std::invalid_argument("certify_subsequence: positions must be strictly increasing");
  }
  for (std::size_t a = 0; a < positions.size(); ++a)
    for (std::size_t b = a; b < positions.size(); ++b)
      if (!(space(at(prefix, positions[a]), at(prefix, positions[b])) < eps)) return false;
  return true;
}

std::vector<PointId> range_prefix(Eigen::Index m) {
  if (m < 1) throw std::invalid_argument("range_prefix: length must be positive");
  std::vector<PointId> prefix(static_cast<std::size_t>(m));
  std::iota(prefix.begin(), prefix.end(), PointId{0});
  return prefix;
}

}  // namespace qmet
