#include "qmet/search.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "qmet/rng.hpp"
#include "qmet/verify.hpp"

namespace qmet {

namespace {

void check_config(const GeneratorConfig& config) {
  if (config.n < 2) throw std::invalid_argument("generator: n must be at least 2");
  if (!(config.value_max >= 1.0))
    throw std::invalid_argument("generator: value bound K must be at least 1");
  if (config.count < 0) throw std::invalid_argument("generator: count must be nonnegative");
}

double generator_tol(const GeneratorConfig& config) {
  return config.value_mode == ValueMode::IntegerGrid ? 0.0 : kDefaultTol;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

std::uint64_t space_seed(const GeneratorConfig& config, int idx) {
  return splitmix64(config.seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(idx));
}

QuasiMetricSpace random_quasi_metric(const GeneratorConfig& config) {
  check_config(config);
  const Eigen::Index n = config.n;
  Rng rng = seeded_rng(config.seed);

  DistanceMatrix d(n, n);
  const auto grid_max = static_cast<std::int64_t>(std::llround(config.value_max));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) {
        d(i, j) = 0.0;
      } else if (config.value_mode == ValueMode::IntegerGrid) {
        d(i, j) = static_cast<double>(rand_int(rng, 1, grid_max));
      } else {
        d(i, j) = rand_positive(rng, config.value_max);
      }
    }

  // Sweep the min-plus relaxation until nothing moves; the fixpoint
  // condition is exactly the triangle inequality on the stored doubles.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
          const double via = d(i, k) + d(k, j);
          if (via < d(i, j)) {
            d(i, j) = via;
            changed = true;
          }
        }
  }

  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j && !(d(i, j) > 0.0))
        throw std::logic_error("random_quasi_metric: relaxation lost positivity");

  return QuasiMetricSpace(std::move(d), {}, true);
}

HuntReport counterexample_hunt(const GeneratorConfig& config, int max_n_exhaustive,
                               std::span<const QuasiMetricSpace> injected) {
  check_config(config);
  if (config.n > max_n_exhaustive)
    throw std::invalid_argument("counterexample_hunt: n exceeds the enumeration bound");
  const auto t0 = Clock::now();

  HuntReport report;
  report.config = config;
  report.max_n_exhaustive = max_n_exhaustive;

  double fraction_sum = 0.0;
  auto process = [&](const QuasiMetricSpace& space, std::uint64_t seed) {
    const PlasticityStats stats = plasticity_check_finite(space, max_n_exhaustive);
    ++report.spaces_tested;
    report.bijections_enumerated += stats.noncontractive_bijections.size() +
                                    stats.nonexpansive_bijections.size();
    fraction_sum += asymmetric_pair_fraction(space);
    for (const MapUnderTest& map : stats.noncontractive_nonisometries) {
      // Would refute finite plasticity; recorded in full for replay.
      const MapClassification c = classify_map(space, map, 0.0);
      PairWitness witness{};
      if (c.expanding_witness) witness = *c.expanding_witness;
      report.noncontractive_nonisometries_found.push_back(
          {seed, space.distances(), map, witness});
    }
  };

  for (int idx = 0; idx < config.count; ++idx) {
    GeneratorConfig one = config;
    one.seed = space_seed(config, idx);
    process(random_quasi_metric(one), one.seed);
  }

  for (std::size_t k = 0; k < injected.size(); ++k) {
    const QuasiMetricSpace& space = injected[k];
    const ViolationReport axioms = check_axioms(space, generator_tol(config));
    if (!axioms.passed()) {
      report.injected_excluded.push_back(
          {k, "fails the axiom scan", axioms.total_violations});
      continue;
    }
    if (space.size() > max_n_exhaustive) {
      report.injected_excluded.push_back({k, "exceeds the enumeration bound", 0});
      continue;
    }
    process(space, 0);
  }

  if (report.spaces_tested > 0)
    report.mean_asymmetric_fraction =
        fraction_sum / static_cast<double>(report.spaces_tested);
  report.elapsed_seconds = seconds_since(t0);
  return report;
}

StressReport theorem3_stress(const GeneratorConfig& config, int maps_per_space) {
  check_config(config);
  if (maps_per_space < 0)
    throw std::invalid_argument("theorem3_stress: maps_per_space must be nonnegative");
  const auto t0 = Clock::now();

  StressReport report;
  report.config = config;
  report.maps_per_space = maps_per_space;

  double fraction_sum = 0.0;
  for (int idx = 0; idx < config.count; ++idx) {
    GeneratorConfig one = config;
    one.seed = space_seed(config, idx);
    const QuasiMetricSpace space = random_quasi_metric(one);
    fraction_sum += asymmetric_pair_fraction(space);

    Rng map_rng = seeded_rng(one.seed, 1);
    for (int m = 0; m < maps_per_space; ++m) {
      MapUnderTest map;
      map.images.reserve(static_cast<std::size_t>(space.size()));
      for (Eigen::Index i = 0; i < space.size(); ++i)
        map.images.push_back(static_cast<PointId>(
            rand_below(map_rng, static_cast<std::uint64_t>(space.size()))));
      ++report.maps_tested;

      const MapClassification c = classify_map(space, map, 0.0);
      if (!c.expanding_witness) continue;
      ++report.expanding_found;
      if (find_contracting_pair(space, map))
        ++report.confirmations;
      else
        report.refutations.push_back(
            {one.seed, space.distances(), map, *c.expanding_witness});
    }
  }

  if (config.count > 0)
    report.mean_asymmetric_fraction = fraction_sum / static_cast<double>(config.count);
  report.elapsed_seconds = seconds_since(t0);
  return report;
}

}  // namespace qmet
