#include "maxdist/experiment.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace maxdist {
namespace {

constexpr double kDroppedMarker = std::numeric_limits<double>::quiet_NaN();
constexpr int kGridSize = 512;

void check_config(const ExperimentConfig& config) {
  if (config.n < 2) throw std::invalid_argument("intensity n must be >= 2");
  if (config.reps < 1) throw std::invalid_argument("reps must be >= 1");
  if (config.m < 1) throw std::invalid_argument("truncation m must be >= 1");
}

// Deterministic reduction of the raw per-replication values; identical for
// the serial and the parallel path.
ExperimentResult reduce(std::vector<double>&& emp_raw,
                        std::vector<double>&& lim_raw) {
  ExperimentResult result;
  result.limit = std::move(lim_raw);
  result.empirical.reserve(emp_raw.size());
  for (std::uint64_t r = 0; r < emp_raw.size(); ++r) {
    if (std::isnan(emp_raw[r])) {
      ++result.dropped;
    } else {
      result.empirical_rep.push_back(r);
      result.empirical.push_back(emp_raw[r]);
    }
  }
  if (result.empirical.empty())
    throw std::runtime_error(
        "all replications dropped (fewer than 2 points each)");

  const EmpiricalCDF emp_cdf(result.empirical);
  const EmpiricalCDF lim_cdf(result.limit);
  result.ks = ks_distance(emp_cdf, lim_cdf);

  std::vector<double> pooled = result.empirical;
  pooled.insert(pooled.end(), result.limit.begin(), result.limit.end());
  const EmpiricalCDF pooled_cdf(std::move(pooled));
  const double hi = pooled_cdf.quantile(0.999);
  result.grid.resize(kGridSize);
  result.grid_empirical.resize(kGridSize);
  result.grid_limit.resize(kGridSize);
  for (int i = 0; i < kGridSize; ++i) {
    const double t = hi * static_cast<double>(i) / (kGridSize - 1);
    result.grid[i] = t;
    result.grid_empirical[i] = emp_cdf.eval(t);
    result.grid_limit[i] = lim_cdf.eval(t);
  }
  return result;
}

}  // namespace

double empirical_replication(const ExperimentConfig& config,
                             std::uint64_t rep) {
  const Cloud cloud = sample_cloud(config.region, config.n, config.regime,
                                   {config.master_seed, rep});
  if (cloud.points.size() < 2) return kDroppedMarker;
  return scaled_deficiency(cloud, config.region.a());
}

double limit_replication(const ExperimentConfig& config, std::uint64_t rep) {
  return sample_limit(config.region, config.m,
                      child_seed({config.master_seed, rep}))
      .value;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  check_config(config);
  const auto t0 = std::chrono::steady_clock::now();
  const auto reps = static_cast<std::int64_t>(config.reps);
  std::vector<double> emp_raw(config.reps);
  std::vector<double> lim_raw(config.reps);

#ifdef _OPENMP
  const int nthreads =
      config.threads > 0 ? config.threads : omp_get_num_procs();
#pragma omp parallel for schedule(dynamic, 16) num_threads(nthreads)
#endif
  for (std::int64_t r = 0; r < reps; ++r) {
    emp_raw[r] = empirical_replication(config, r);
    lim_raw[r] = limit_replication(config, r);
  }

  ExperimentResult result =
      reduce(std::move(emp_raw), std::move(lim_raw));
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

ExperimentResult run_experiment_serial(const ExperimentConfig& config) {
  check_config(config);
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<double> emp_raw(config.reps);
  std::vector<double> lim_raw(config.reps);
  for (std::uint64_t r = 0; r < config.reps; ++r) {
    emp_raw[r] = empirical_replication(config, r);
    lim_raw[r] = limit_replication(config, r);
  }
  ExperimentResult result =
      reduce(std::move(emp_raw), std::move(lim_raw));
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

}  // namespace maxdist
