#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "maxdist/geometry.hpp"
#include "maxdist/region.hpp"
#include "maxdist/rng.hpp"

namespace maxdist {

// Truncated realization of the norm-angle distribution NA(sigma, tau):
//   S_k = Y_1 + ... + Y_k,  Y_j i.i.d. unit exponential
//   z1_k = sigma * S_k^(2/3)        (strictly increasing in k)
//   z2_k = U_k * tau * sqrt(z1_k),  U_k i.i.d. uniform on [0,1]
struct NormAngleSample {
  int m{0};
  std::vector<double> z1;
  std::vector<double> z2;
};

// Draws (Y_k, U_k) interleaved, so for a fixed stream the order-m sample is
// a prefix of every higher-order one (couples truncations).
NormAngleSample sample_norm_angle(double sigma, double tau, int m,
                                  RngStream& rng);

// Deterministic construction from explicit (Y, U) sequences; test hook.
NormAngleSample norm_angle_from_sequences(double sigma, double tau,
                                          std::span<const double> y,
                                          std::span<const double> u);

struct CrossMin {
  double value{0.0};
  int k{0};
  int l{0};  // attaining indices, 0-based, lexicographically smallest tie
};

// min over 1<=k,l<=m of z1_k^i + z1_l^j + (a/4)(z2_k^i -+ z2_l^j)^2;
// the angles subtract for diagonal quadrant pairs and add for same-side
// pairs. Full m x m enumeration.
CrossMin s_cross(const NormAngleSample& na_i, const NormAngleSample& na_j,
                 double a, PairMode mode);

struct LimitSample {
  double value{0.0};
  std::array<int, 2> quadrants{0, 0};  // attaining pair, 1-based
  int k{0};
  int l{0};
};

// One draw of the truncated limit law: four independent norm-angle samples
// with per-quadrant (sigma_i, tau_i), combined as
// min{S^{1,2}, S^{1,3}, S^{2,4}, S^{3,4}}. Per-quadrant substreams are
// derived from the seed, so draws with the same seed and different m are
// coupled (value non-increasing in m).
LimitSample sample_limit(const RegionSpec& region, int m, std::uint64_t seed);

}  // namespace maxdist
