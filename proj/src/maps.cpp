#include "qmet/maps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qmet {

bool MapUnderTest::is_bijection() const {
  const auto n = images.size();
  std::vector<bool> hit(n, false);
  for (PointId img : images) {
    if (img < 0 || static_cast<std::size_t>(img) >= n) return false;
    if (hit[static_cast<std::size_t>(img)]) return false;
    hit[static_cast<std::size_t>(img)] = true;
  }
  return true;
}

namespace {

void check_map(const QuasiMetricSpace& space, const MapUnderTest& map) {
  if (map.size() != space.size())
    throw std::invalid_argument("map is not total on the space");
  for (PointId img : map.images)
    if (img < 0 || img >= space.size())
      throw std::invalid_argument("map image out of range");
}

std::vector<PointId> resolve_domain(const QuasiMetricSpace& space,
                                    std::span<const PointId> domain) {
  std::vector<PointId> dom;
  if (domain.empty()) {
    dom.resize(static_cast<std::size_t>(space.size()));
    std::iota(dom.begin(), dom.end(), PointId{0});
    return dom;
  }
  dom.assign(domain.begin(), domain.end());
  std::sort(dom.begin(), dom.end());
  if (std::adjacent_find(dom.begin(), dom.end()) != dom.end())
    throw std::invalid_argument("domain contains duplicate points");
  if (dom.front() < 0 || dom.back() >= space.size())
    throw std::invalid_argument("domain point out of range");
  return dom;
}

}  // namespace

MapClassification classify_map(const QuasiMetricSpace& space, const MapUnderTest& map,
                               double tol, std::span<const PointId> domain) {
  check_map(space, map);
  if (tol < 0.0) throw std::invalid_argument("classify_map: tol must be nonnegative");
  const std::vector<PointId> dom = resolve_domain(space, domain);

  MapClassification c;
  c.is_bijection = map.is_bijection();
  c.tolerance = tol;
  for (PointId x : dom) {
    for (PointId y : dom) {
      const double before = space(x, y);
      const double after = space(map(x), map(y));
      if (after > before + tol) {
        c.nonexpansive = false;
        c.isometry = false;
        if (!c.expanding_witness) c.expanding_witness = PairWitness{x, y, before, after};
      } else if (after < before - tol) {
        c.noncontractive = false;
        c.isometry = false;
        if (!c.contracting_witness) c.contracting_witness = PairWitness{x, y, before, after};
      }
    }
  }
  return c;
}

ShiftInstance shift_map(Eigen::Index n) {
  if (n < 3) throw std::invalid_argument("shift_map: N must be at least 3");
  QuasiMetricSpace space = circle_example(n + 2);
  MapUnderTest map;
  map.images.resize(static_cast<std::size_t>(n + 2));
  for (Eigen::Index i = 0; i < n; ++i) map.images[static_cast<std::size_t>(i)] = i + 2;
  map.images[static_cast<std::size_t>(n)] = n;          // totality bookkeeping only;
  map.images[static_cast<std::size_t>(n + 1)] = n + 1;  // excluded from the domain
  std::vector<PointId> domain(static_cast<std::size_t>(n));
  std::iota(domain.begin(), domain.end(), PointId{0});
  return {std::move(space), std::move(map), std::move(domain)};
}

std::optional<PairWitness> find_contracting_pair(const QuasiMetricSpace& space,
                                                 const MapUnderTest& map,
                                                 std::span<const PointId> domain) {
  check_map(space, map);
  const std::vector<PointId> dom = resolve_domain(space, domain);
  for (PointId x : dom)
    for (PointId y : dom) {
      const double before = space(x, y);
      const double after = space(map(x), map(y));
      if (after < before) return PairWitness{x, y, before, after};
    }
  return std::nullopt;
}

PairWitness symmetrization_witness(const QuasiMetricSpace& space,
                                   const MapUnderTest& map,
                                   const PairWitness& expanding, double tol) {
  check_map(space, map);
  if (!map.is_bijection())
    throw std::invalid_argument("symmetrization_witness: map must be a bijection");
  const PointId p = expanding.x;
  const PointId q = expanding.y;
  if (p < 0 || p >= space.size() || q < 0 || q >= space.size())
    throw std::invalid_argument("symmetrization_witness: witness pair out of range");
  const double before = space(p, q);
  const double after = space(map(p), map(q));
  if (!(after > before) || expanding.before != before || expanding.after != after)
    throw std::invalid_argument("symmetrization_witness: not a valid expanding witness");

  const double ds_before = space(p, q) + space(q, p);
  const double ds_after = space(map(p), map(q)) + space(map(q), map(p));
  const double n = static_cast<double>(space.size());
  const double bound = n * n * tol;
  if (std::abs(ds_after - ds_before) > bound)
    throw DsIsometryError(
        "symmetrized distance not preserved at the witness pair: |" +
        std::to_string(ds_after) + " - " + std::to_string(ds_before) + "| > " +
        std::to_string(bound) +
        "; a non-contractive bijection on a finite space cannot do this, so "
        "either the map contracts elsewhere or the route does not apply");

  PairWitness out{q, p, space(q, p), space(map(q), map(p))};
  if (!(out.after < out.before))
    throw DsIsometryError("derived pair (q, p) fails to contract");
  return out;
}

namespace {

struct EnumPass {
  const DistanceMatrix& d;
  Eigen::Index n;
  bool require_geq;  // true: after >= before (non-contractive direction)
  std::vector<PointId> images;
  std::vector<bool> used;
  std::uint64_t nodes = 0;
  std::uint64_t isometries = 0;
  std::vector<MapUnderTest> survivors;
  std::vector<MapUnderTest> nonisometries;

  explicit EnumPass(const DistanceMatrix& dist, bool geq)
      : d(dist), n(dist.rows()), require_geq(geq),
        images(static_cast<std::size_t>(n), -1),
        used(static_cast<std::size_t>(n), false) {}

  bool pair_ok(double before, double after) const {
    return require_geq ? after >= before : after <= before;
  }

  void dfs(Eigen::Index k, bool any_strict) {
    if (k == n) {
      survivors.push_back({images});
      if (any_strict)
        nonisometries.push_back({images});
      else
        ++isometries;
      return;
    }
    for (Eigen::Index t = 0; t < n; ++t) {
      if (used[static_cast<std::size_t>(t)]) continue;
      ++nodes;
      bool ok = true;
      bool strict = any_strict;
      for (Eigen::Index j = 0; j < k && ok; ++j) {
        const PointId ij = images[static_cast<std::size_t>(j)];
        const double b1 = d(j, k), a1 = d(ij, t);
        const double b2 = d(k, j), a2 = d(t, ij);
        ok = pair_ok(b1, a1) && pair_ok(b2, a2);
        strict = strict || a1 != b1 || a2 != b2;
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(t)] = true;
      images[static_cast<std::size_t>(k)] = t;
      dfs(k + 1, strict);
      used[static_cast<std::size_t>(t)] = false;
    }
  }
};

}  // namespace

PlasticityStats plasticity_check_finite(const QuasiMetricSpace& space, int max_n) {
  const Eigen::Index n = space.size();
  if (n > max_n)
    throw std::invalid_argument("plasticity_check_finite: space exceeds the enumeration bound");

  PlasticityStats stats;
  stats.n = n;
  stats.permutations_total = 1;
  for (Eigen::Index k = 2; k <= n; ++k)
    stats.permutations_total *= static_cast<std::uint64_t>(k);

  EnumPass noncontractive(space.distances(), /*geq=*/true);
  noncontractive.dfs(0, false);
  stats.nodes_noncontractive = noncontractive.nodes;
  stats.isometries = noncontractive.isometries;  // every isometry survives this pass
  stats.noncontractive_bijections = std::move(noncontractive.survivors);
  stats.noncontractive_nonisometries = std::move(noncontractive.nonisometries);

  EnumPass nonexpansive(space.distances(), /*geq=*/false);
  nonexpansive.dfs(0, false);
  stats.nodes_nonexpansive = nonexpansive.nodes;
  stats.nonexpansive_bijections = std::move(nonexpansive.survivors);
  stats.nonexpansive_nonisometries = std::move(nonexpansive.nonisometries);

  return stats;
}

}  // namespace qmet
