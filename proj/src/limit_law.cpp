#include "maxdist/limit_law.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace maxdist {
namespace {

void check_na_params(double sigma, double tau, int m) {
  if (!(sigma > 0.0) || !(tau > 0.0) || m < 1)
    throw std::invalid_argument("invalid NA parameters");
}

}  // namespace

NormAngleSample sample_norm_angle(double sigma, double tau, int m,
                                  RngStream& rng) {
  check_na_params(sigma, tau, m);
  NormAngleSample na;
  na.m = m;
  na.z1.resize(m);
  na.z2.resize(m);
  double s = 0.0;
  for (int k = 0; k < m; ++k) {
    s += rng.next_exponential();
    const double u = rng.next_double();
    na.z1[k] = sigma * std::pow(s, 2.0 / 3.0);
    na.z2[k] = u * tau * std::sqrt(na.z1[k]);
  }
  return na;
}

NormAngleSample norm_angle_from_sequences(double sigma, double tau,
                                          std::span<const double> y,
                                          std::span<const double> u) {
  if (y.size() != u.size() || y.empty())
    throw std::invalid_argument("invalid NA parameters");
  check_na_params(sigma, tau, static_cast<int>(y.size()));
  NormAngleSample na;
  na.m = static_cast<int>(y.size());
  na.z1.resize(na.m);
  na.z2.resize(na.m);
  double s = 0.0;
  for (int k = 0; k < na.m; ++k) {
    s += y[k];
    na.z1[k] = sigma * std::pow(s, 2.0 / 3.0);
    na.z2[k] = u[k] * tau * std::sqrt(na.z1[k]);
  }
  return na;
}

CrossMin s_cross(const NormAngleSample& na_i, const NormAngleSample& na_j,
                 double a, PairMode mode) {
  if (na_i.m != na_j.m) throw std::invalid_argument("truncation mismatch");
  if (na_i.m < 1 || !(a > 0.0))
    throw std::invalid_argument("invalid NA parameters");
  const double quarter_a = a / 4.0;
  const double sign = mode == PairMode::Opposite ? -1.0 : 1.0;
  CrossMin best{std::numeric_limits<double>::infinity(), 0, 0};
  for (int k = 0; k < na_i.m; ++k) {
    for (int l = 0; l < na_j.m; ++l) {
      const double d = na_i.z2[k] + sign * na_j.z2[l];
      const double v = na_i.z1[k] + na_j.z1[l] + quarter_a * d * d;
      if (v < best.value) best = {v, k, l};
    }
  }
  return best;
}

LimitSample sample_limit(const RegionSpec& region, int m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("invalid NA parameters");

  std::array<NormAngleSample, 4> na;
  for (int quad = 1; quad <= 4; ++quad) {
    const QuadrantConstants k = region.quadrant_constants(quad);
    RngStream stream(derive_substream(seed, static_cast<std::uint64_t>(quad - 1)));
    na[quad - 1] = sample_norm_angle(k.sigma, k.tau, m, stream);
  }

  struct PairSpec {
    int i, j;
    PairMode mode;
  };
  constexpr PairSpec pairs[4] = {{1, 2, PairMode::SameSide},
                                 {1, 3, PairMode::Opposite},
                                 {2, 4, PairMode::Opposite},
                                 {3, 4, PairMode::SameSide}};

  LimitSample out;
  out.value = std::numeric_limits<double>::infinity();
  for (const PairSpec& pr : pairs) {
    const CrossMin cm =
        s_cross(na[pr.i - 1], na[pr.j - 1], region.a(), pr.mode);
    if (cm.value < out.value) {
      out.value = cm.value;
      out.quadrants = {pr.i, pr.j};
      out.k = cm.k;
      out.l = cm.l;
    }
  }
  return out;
}

}  // namespace maxdist
