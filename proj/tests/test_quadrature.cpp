#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "maxdist/quadrature.hpp"

using namespace maxdist;

TEST_CASE("polynomials and smooth integrands") {
  CHECK(integrate([](double x) { return x * x * x * x * x; }, 0.0, 2.0,
                  1e-13) == doctest::Approx(64.0 / 6.0).epsilon(1e-13));
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0,
                  std::numbers::pi, 1e-13) ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, 30.0, 1e-13) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("square-root endpoint singularities in the derivative") {
  // the cap integrands look exactly like these near their endpoints
  CHECK(integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-11));
  CHECK(integrate(
            [](double x) {
              const double arg = 1.0 - x * x;
              return arg > 0.0 ? std::sqrt(arg) : 0.0;
            },
            -1.0, 1.0, 1e-12) ==
        doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-10));
}

TEST_CASE("degenerate intervals") {
  CHECK(integrate([](double) { return 1.0; }, 1.0, 1.0, 1e-12) == 0.0);
  CHECK(integrate([](double) { return 1.0; }, 2.0, 1.0, 1e-12) == 0.0);
}
