#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "maxdist/rng.hpp"
#include "maxdist/stats.hpp"

using namespace maxdist;

namespace {

std::vector<double> random_samples(RngStream& rng, int n, double scale) {
  std::vector<double> v(n);
  for (auto& x : v) x = scale * rng.next_double();
  return v;
}

// Independent O(n*m) scan: evaluate |F1 - F2| by naive counting at every
// jump point of either sample.
double ks_brute(const std::vector<double>& a, const std::vector<double>& b) {
  auto frac_le = [](const std::vector<double>& v, double t) {
    std::size_t c = 0;
    for (double x : v)
      if (x <= t) ++c;
    return static_cast<double>(c) / static_cast<double>(v.size());
  };
  double d = 0.0;
  for (const auto* v : {&a, &b})
    for (double t : *v)
      d = std::max(d, std::fabs(frac_le(a, t) - frac_le(b, t)));
  return d;
}

}  // namespace

TEST_CASE("ecdf eval on the spec examples") {
  const EmpiricalCDF e({1.0, 2.0, 3.0});
  CHECK(e.eval(2.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(e.eval(0.5) == 0.0);
  CHECK(e.eval(3.0) == 1.0);
  CHECK(e.eval(99.0) == 1.0);

  double prev = -1.0;
  for (double t = 0.0; t <= 4.0; t += 0.01) {
    const double v = e.eval(t);
    REQUIRE(v >= prev);
    prev = v;
  }
  CHECK_THROWS_AS(EmpiricalCDF({}), std::invalid_argument);
}

TEST_CASE("ecdf eval agrees exactly with a counting oracle") {
  RngStream rng(515);
  const auto samples = random_samples(rng, 2000, 10.0);
  const EmpiricalCDF e(samples);
  for (int i = 0; i < 10000; ++i) {
    const double t = 12.0 * rng.next_double() - 1.0;
    std::size_t c = 0;
    for (double x : samples)
      if (x <= t) ++c;
    REQUIRE(e.eval(t) ==
            static_cast<double>(c) / static_cast<double>(samples.size()));
  }
}

TEST_CASE("ks distance on the spec examples") {
  const EmpiricalCDF a({1.0, 2.0, 3.0});
  CHECK(ks_distance(a, a) == 0.0);
  CHECK(ks_distance(EmpiricalCDF({0.0}), EmpiricalCDF({1.0})) == 1.0);
  const EmpiricalCDF b({1.5, 2.0, 7.0, -3.0});
  CHECK(ks_distance(a, b) == ks_distance(b, a));
}

TEST_CASE("ks distance equals the brute-force scan") {
  RngStream rng(616);
  for (int trial = 0; trial < 30; ++trial) {
    const int na = 1 + static_cast<int>(rng.next_u64() % 200);
    const int nb = 1 + static_cast<int>(rng.next_u64() % 200);
    auto a = random_samples(rng, na, 5.0);
    auto b = random_samples(rng, nb, 5.0);
    if (trial % 3 == 0) {  // shared jump points
      for (auto& x : a) x = std::round(x * 4.0) / 4.0;
      for (auto& x : b) x = std::round(x * 4.0) / 4.0;
    }
    REQUIRE(ks_distance(EmpiricalCDF(a), EmpiricalCDF(b)) == ks_brute(a, b));
  }
}

TEST_CASE("quantile is the ceil(p*count) order statistic") {
  const EmpiricalCDF e({4.0, 1.0, 3.0, 2.0});
  CHECK(e.quantile(0.5) == 2.0);
  CHECK(e.quantile(0.999999) == 4.0);
  CHECK(e.quantile(0.25) == 1.0);
  CHECK(e.quantile(0.250001) == 2.0);

  double prev = -1e300;
  for (double p = 0.01; p < 1.0; p += 0.007) {
    const double v = e.quantile(p);
    REQUIRE(v >= prev);
    prev = v;
  }
  CHECK_THROWS_AS(e.quantile(0.0), std::invalid_argument);
  CHECK_THROWS_AS(e.quantile(1.0), std::invalid_argument);
  CHECK_THROWS_AS(e.quantile(-2.0), std::invalid_argument);
}
