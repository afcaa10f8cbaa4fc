#include "maxdist/rng.hpp"

#include <cmath>

namespace maxdist {
namespace {

// log(k!) for k = 0..9
constexpr double kLogFactorial[10] = {
    0.0,
    0.0,
    0.6931471805599453,
    1.791759469228055,
    3.1780538303479458,
    4.787491742782046,
    6.579251212010101,
    8.525161361065415,
    10.60460290274525,
    12.801827480081469,
};

// Stirling series for log(k!), k >= 10; abs error < 1e-12 there.
double log_factorial(std::uint64_t k) {
  if (k < 10) return kLogFactorial[k];
  const double x = static_cast<double>(k) + 1.0;
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)));
  return 0.9189385332046727 + (x - 0.5) * std::log(x) - x + series;
}

}  // namespace

std::uint64_t RngStream::next_poisson(double mean) {
  if (!(mean > 0.0) || !std::isfinite(mean))
    throw std::invalid_argument("poisson mean must be positive and finite");

  if (mean < 30.0) {
    // Inversion by sequential search.
    double p = std::exp(-mean);
    double cum = p;
    const double u = next_double();
    std::uint64_t k = 0;
    const std::uint64_t cap = static_cast<std::uint64_t>(10.0 * mean) + 128;
    while (u > cum && k < cap) {
      ++k;
      p *= mean / static_cast<double>(k);
      cum += p;
    }
    return k;
  }

  // Hoermann's PTRS transformed rejection, valid for mean >= 10.
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);

  for (;;) {
    const double u = next_double() - 0.5;
    const double v = next_double();
    const double us = 0.5 - std::fabs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    const std::uint64_t k = static_cast<std::uint64_t>(kf);
    const double lhs = std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b);
    const double rhs = kf * loglam - mean - log_factorial(k);
    if (lhs <= rhs) return k;
  }
}

}  // namespace maxdist
