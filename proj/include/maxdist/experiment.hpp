#pragma once

#include <cstdint>
#include <vector>

#include "maxdist/limit_law.hpp"
#include "maxdist/region.hpp"
#include "maxdist/sampling.hpp"
#include "maxdist/stats.hpp"

namespace maxdist {

struct ExperimentConfig {
  RegionSpec region{RegionSpec::ellipse(1.0, 0.5)};
  std::uint64_t n{1000};
  std::uint64_t reps{5000};
  int m{8};
  Regime regime{Regime::FixedN};
  std::uint64_t master_seed{0};
  int threads{0};  // 0 = available parallelism; execution-only knob
};

struct ExperimentResult {
  // Surviving replications in replication-index order.
  std::vector<std::uint64_t> empirical_rep;
  std::vector<double> empirical;
  std::vector<double> limit;
  std::uint64_t dropped{0};  // poissonized clouds with fewer than 2 points

  double ks{0.0};
  // Shared evaluation grid: 512 points from 0 to the 0.999 quantile of the
  // pooled samples, with both ECDFs evaluated on it.
  std::vector<double> grid;
  std::vector<double> grid_empirical;
  std::vector<double> grid_limit;

  double wall_seconds{0.0};  // not serialized
};

// Per-replication kernels; results depend only on (config, rep index).
// A dropped empirical replication (poissonized count < 2) returns NaN.
double empirical_replication(const ExperimentConfig& config, std::uint64_t rep);
double limit_replication(const ExperimentConfig& config, std::uint64_t rep);

// OpenMP-parallel replication loop (config.threads caps the team size).
ExperimentResult run_experiment(const ExperimentConfig& config);

// Serial reference: identical output, plain loop; kept for testing and for
// benchmarking the parallel kernel against.
ExperimentResult run_experiment_serial(const ExperimentConfig& config);

}  // namespace maxdist
