#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qmet/space.hpp"

namespace qmet {

/// Total self-map on point indices: images[i] is the image of point i.
struct MapUnderTest {
  std::vector<PointId> images;

  Eigen::Index size() const { return static_cast<Eigen::Index>(images.size()); }
  PointId operator()(PointId i) const { return images[static_cast<std::size_t>(i)]; }
  /// True iff images is a permutation of 0..n-1.
  bool is_bijection() const;
};

/// Ordered pair with its distance before and after applying the map.
struct PairWitness {
  PointId x = 0;
  PointId y = 0;
  double before = 0.0;  // d(x, y)
  double after = 0.0;   // d(F(x), F(y))
};

struct MapClassification {
  bool nonexpansive = true;    // after <= before + tol on every scanned pair
  bool noncontractive = true;  // after >= before - tol on every scanned pair
  bool isometry = true;        // |after - before| <= tol on every scanned pair
  bool is_bijection = false;   // property of the whole map, not the domain
  double tolerance = 0.0;      // comparison mode used by the scan
  std::optional<PairWitness> expanding_witness;   // first in lexicographic order
  std::optional<PairWitness> contracting_witness;
};

/// Full pair scan over the domain (all points when empty). tol = 0 gives
/// exact stored-value comparison, the right mode for discrete-valued
/// spaces; chord-valued comparisons may pass a small tolerance instead.
MapClassification classify_map(const QuasiMetricSpace& space,
                               const MapUnderTest& map, double tol = 0.0,
                               std::span<const PointId> domain = {});

/// The index shift k -> k+2 on the circle family. A truncation cannot carry
/// it as a self-map, so the ambient space is circle_example(N+2), the two
/// extra points are fixed for totality bookkeeping only, and the scanned
/// domain is restricted to indices 0..N-1.
struct ShiftInstance {
  QuasiMetricSpace space;
  MapUnderTest map;
  std::vector<PointId> domain;
};

ShiftInstance shift_map(Eigen::Index n);

/// Lexicographically first pair with d(F(x),F(y)) < d(x,y) under exact
/// strict comparison, or nothing.
std::optional<PairWitness> find_contracting_pair(const QuasiMetricSpace& space,
                                                 const MapUnderTest& map,
                                                 std::span<const PointId> domain = {});

/// The symmetrization route's premise failed: d(x,y) + d(y,x) is not
/// preserved at the witness pair. A non-contractive bijection on a finite
/// space cannot trigger this (the reindexing identity forces pointwise
/// equality); for other maps it means the route does not apply.
class DsIsometryError : public std::logic_error {
  using std::logic_error::logic_error;
};

/// Turns an expanding witness (p, q) of a bijection that preserves the
/// symmetrized distance into the contracting witness (q, p): from
/// d_s(F(p),F(q)) = d_s(p,q) and d(F(p),F(q)) > d(p,q) it follows that
/// d(F(q),F(p)) < d(q,p). The d_s check is allowed slack n^2 * tol; the
/// returned witness satisfies its strict inequality exactly.
PairWitness symmetrization_witness(const QuasiMetricSpace& space,
                                   const MapUnderTest& map,
                                   const PairWitness& expanding,
                                   double tol = kDefaultTol);

struct PlasticityStats {
  Eigen::Index n = 0;
  std::uint64_t permutations_total = 0;  // n!
  std::uint64_t nodes_noncontractive = 0;
  std::uint64_t nodes_nonexpansive = 0;
  std::uint64_t isometries = 0;
  std::vector<MapUnderTest> noncontractive_bijections;
  std::vector<MapUnderTest> nonexpansive_bijections;
  std::vector<MapUnderTest> noncontractive_nonisometries;
  std::vector<MapUnderTest> nonexpansive_nonisometries;

  bool all_noncontractive_are_isometries() const {
    return noncontractive_nonisometries.empty();
  }
  bool all_nonexpansive_are_isometries() const {
    return nonexpansive_nonisometries.empty();
  }
};

/// Enumerates all permutations twice with prefix pruning, once per
/// direction: images are assigned to points in ascending index and a
/// partial assignment dies as soon as an already-assigned pair violates
/// the direction being enumerated. Exact comparisons on stored values.
/// Throws when the space is larger than max_n.
PlasticityStats plasticity_check_finite(const QuasiMetricSpace& space,
                                        int max_n = 8);

}  // namespace qmet
