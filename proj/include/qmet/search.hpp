#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qmet/maps.hpp"
#include "qmet/space.hpp"

namespace qmet {

enum class ValueMode { IntegerGrid, UniformReal };

struct GeneratorConfig {
  Eigen::Index n = 4;
  ValueMode value_mode = ValueMode::IntegerGrid;
  /// K: entries drawn from the integer grid {1..K} or from the reals (0, K].
  double value_max = 5.0;
  std::uint64_t seed = 0;
  int count = 1;
};

/// Seed for the idx-th space of a batch.
std::uint64_t space_seed(const GeneratorConfig& config, int idx);

/// Random zero-diagonal positive matrix, then shortest-path relaxation
/// d(i,j) <- min(d(i,j), d(i,k) + d(k,j)) swept to a fixpoint to enforce
/// the triangle inequality. The repair treats ordered pairs independently,
/// so asymmetry survives; it biases the distribution toward path metrics,
/// which is acceptable since the goal is valid instances, not uniform
/// sampling. Deterministic per seed.
QuasiMetricSpace random_quasi_metric(const GeneratorConfig& config);

/// A fully reproducible counterexample candidate.
struct HuntInstance {
  std::uint64_t seed = 0;
  DistanceMatrix d;
  MapUnderTest map;
  PairWitness witness;  // pair breaking the isometry
};

struct ExcludedSpace {
  std::size_t index = 0;
  std::string reason;
  std::uint64_t total_violations = 0;
};

struct HuntReport {
  GeneratorConfig config;
  int max_n_exhaustive = 8;
  std::uint64_t spaces_tested = 0;
  /// Complete bijections that survived pruning and were fully classified,
  /// summed over both enumeration directions.
  std::uint64_t bijections_enumerated = 0;
  std::vector<HuntInstance> noncontractive_nonisometries_found;
  std::vector<ExcludedSpace> injected_excluded;
  double mean_asymmetric_fraction = 0.0;
  double elapsed_seconds = 0.0;
};

/// Runs plasticity_check_finite over generated spaces, plus any injected
/// ones. Injected spaces pass through the axiom gate first; failures are
/// excluded from enumeration and reported separately.
HuntReport counterexample_hunt(const GeneratorConfig& config,
                               int max_n_exhaustive = 8,
                               std::span<const QuasiMetricSpace> injected = {});

struct StressRefutation {
  std::uint64_t seed = 0;
  DistanceMatrix d;
  MapUnderTest map;
  PairWitness expanding;
};

struct StressReport {
  GeneratorConfig config;
  int maps_per_space = 0;
  std::uint64_t maps_tested = 0;
  std::uint64_t expanding_found = 0;
  std::uint64_t confirmations = 0;
  std::vector<StressRefutation> refutations;
  double mean_asymmetric_fraction = 0.0;
  double elapsed_seconds = 0.0;
};

/// Draws random total maps (not necessarily bijective) on each generated
/// space; whenever the exact scan finds an expanding pair, asserts by brute
/// force that a contracting pair exists too. Any refutation is serialized
/// in full and fails the run.
StressReport theorem3_stress(const GeneratorConfig& config, int maps_per_space);

}  // namespace qmet
