#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "maxdist/geometry.hpp"
#include "maxdist/region.hpp"
#include "maxdist/rng.hpp"

namespace maxdist {

// A replication's stream is fully determined by (master_seed,
// replication_index), so replications can run in any order on any number
// of threads with identical results.
struct SeedSpec {
  std::uint64_t master_seed{0};
  std::uint64_t replication_index{0};
};

inline std::uint64_t child_seed(const SeedSpec& seed) {
  return splitmix64_next(seed.master_seed ^
                         (kGoldenGamma * (seed.replication_index + 1)));
}

enum class Regime { FixedN, Poissonized };

struct Cloud {
  std::vector<Point> points;
  Regime regime{Regime::FixedN};
  std::uint64_t nominal_n{0};
};

// One point from the region's distribution. Presets use exact transforms
// (no rejection); custom regions fall back to rejection from the bounding
// box of the boundary evaluators.
Point sample_point(const RegionSpec& region, RngStream& rng);

// Poissonized regime draws N ~ Po(n) and then N i.i.d. points; counts of
// 0 or 1 are legal here and only the diameter is undefined downstream.
Cloud sample_cloud(const RegionSpec& region, std::uint64_t n, Regime regime,
                   const SeedSpec& seed);

// n^(2/3) * (2a - diam); nominal_n scales the statistic even in the
// poissonized regime (the intensity parameter drives the limit).
double scaled_deficiency(const Cloud& cloud, double a);

struct QuadrantSplitReport {
  double diameter{0.0};
  double cross_max{0.0};
  bool cross_defined{false};
  bool coincide{false};
  int quad_i{0};
  int quad_j{0};  // attaining cross-quadrant pair (0,0 if undefined)
  std::array<std::size_t, 4> quadrant_counts{};
  std::vector<int> empty_quadrants;
};

// Compares diam(cloud) with the maximum over the four cross-quadrant
// maxima M^{1,2}, M^{1,3}, M^{2,4}, M^{3,4}; asymptotically they coincide
// with probability tending to one.
QuadrantSplitReport quadrant_split_diagnostic(const Cloud& cloud, double a);

}  // namespace maxdist
