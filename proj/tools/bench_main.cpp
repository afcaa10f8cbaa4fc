// Benchmark: serial reference replication loop vs the OpenMP kernel at
// several thread counts. Verifies that both paths produce identical
// results before timing them.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "maxdist/experiment.hpp"

namespace {

double now_seconds() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

bool identical(const maxdist::ExperimentResult& a,
               const maxdist::ExperimentResult& b) {
  return a.empirical == b.empirical && a.limit == b.limit && a.ks == b.ks &&
         a.dropped == b.dropped && a.grid_empirical == b.grid_empirical;
}

}  // namespace

int main(int argc, char** argv) {
  maxdist::ExperimentConfig config;
  config.region = maxdist::RegionSpec::ellipse(1.0, 0.5);
  config.n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1000;
  config.reps = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1000;
  config.m = 8;
  config.master_seed = 424242;

  std::printf("replication kernel benchmark: n=%llu reps=%llu m=%d\n",
              static_cast<unsigned long long>(config.n),
              static_cast<unsigned long long>(config.reps), config.m);

  double t0 = now_seconds();
  const maxdist::ExperimentResult ref = maxdist::run_experiment_serial(config);
  const double serial_s = now_seconds() - t0;
  std::printf("%-18s %8.3f s   KS=%.5f\n", "serial reference", serial_s,
              ref.ks);

  int max_threads = 1;
#ifdef _OPENMP
  max_threads = omp_get_max_threads();
#endif
  std::vector<int> counts;
  for (int t = 1; t <= max_threads; t *= 2) counts.push_back(t);
  if (counts.back() != max_threads) counts.push_back(max_threads);

  bool all_match = true;
  for (int threads : counts) {
    config.threads = threads;
    t0 = now_seconds();
    const maxdist::ExperimentResult par = maxdist::run_experiment(config);
    const double par_s = now_seconds() - t0;
    const bool match = identical(ref, par);
    all_match = all_match && match;
    std::printf("openmp x%-3d        %8.3f s   speedup %5.2f   %s\n", threads,
                par_s, serial_s / par_s, match ? "identical" : "MISMATCH");
  }

  if (!all_match) {
    std::printf("FAIL: parallel kernel diverged from the serial reference\n");
    return 1;
  }
  return 0;
}
