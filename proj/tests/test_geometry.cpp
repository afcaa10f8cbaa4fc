#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "maxdist/geometry.hpp"
#include "maxdist/rng.hpp"

using namespace maxdist;

namespace {

std::vector<Point> random_cloud(RngStream& rng, int n, double scale) {
  std::vector<Point> pts(n);
  for (auto& p : pts)
    p = {scale * (2.0 * rng.next_double() - 1.0),
         scale * (2.0 * rng.next_double() - 1.0)};
  return pts;
}

double cross3(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Signed-area point-in-convex-polygon oracle (CCW polygon).
bool inside_hull(const std::vector<Point>& hull, Point p, double tol) {
  if (hull.size() == 1)
    return std::fabs(p.x - hull[0].x) <= tol && std::fabs(p.y - hull[0].y) <= tol;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point a = hull[i];
    const Point b = hull[(i + 1) % hull.size()];
    if (cross3(a, b, p) < -tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("brute-force diameter on the spec examples") {
  const std::vector<Point> pair{{0, 0}, {3, 4}};
  const auto r = diameter_bruteforce(pair);
  CHECK(r.value == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(r.i == 0);
  CHECK(r.j == 1);

  const std::vector<Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const auto s = diameter_bruteforce(square);
  CHECK(s.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(s.i == 0);
  CHECK(s.j == 2);  // smallest index pair among the two tied diagonals

  CHECK_THROWS_AS(diameter_bruteforce(std::vector<Point>{{0, 0}}),
                  std::invalid_argument);
}

TEST_CASE("convex hull removes interior and collinear points") {
  const std::vector<Point> pts{{0, 0}, {1, 0}, {0.5, 0.1}, {1, 1}, {0, 1}};
  const auto hull = convex_hull(pts);
  REQUIRE(hull.size() == 4);
  CHECK(hull[0].x == 0.0);
  CHECK(hull[0].y == 0.0);
  CHECK(hull[1].x == 1.0);
  CHECK(hull[1].y == 0.0);
  CHECK(hull[2].x == 1.0);
  CHECK(hull[2].y == 1.0);
  CHECK(hull[3].x == 0.0);
  CHECK(hull[3].y == 1.0);

  const std::vector<Point> collinear{{0, 0}, {1, 1}, {2, 2}};
  const auto two = convex_hull(collinear);
  REQUIRE(two.size() == 2);
  CHECK(two[0].x == 0.0);
  CHECK(two[1].x == 2.0);

  const std::vector<Point> single{{3, -2}};
  REQUIRE(convex_hull(single).size() == 1);
}

TEST_CASE("convex hull: idempotence and containment on random clouds") {
  RngStream rng(1001);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pts = random_cloud(rng, 256, 10.0);
    const auto hull = convex_hull(pts);
    const auto hull2 = convex_hull(hull);
    REQUIRE(hull.size() == hull2.size());
    for (std::size_t i = 0; i < hull.size(); ++i) {
      CHECK(hull[i].x == hull2[i].x);
      CHECK(hull[i].y == hull2[i].y);
    }
    const double tol = 1e-12 * 10.0 * 10.0;  // signed-area units
    for (const auto& p : pts) REQUIRE(inside_hull(hull, p, tol));
  }
}

TEST_CASE("calipers diameter equals brute force on structured inputs") {
  // antipodal vertices of a regular hexagon, circumradius 1
  std::vector<Point> hex;
  for (int k = 0; k < 6; ++k) {
    const double ang = std::numbers::pi / 3.0 * k;
    hex.push_back({std::cos(ang), std::sin(ang)});
  }
  const auto r = diameter_calipers(hex);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-14));
  const auto rb = diameter_bruteforce(hex);
  CHECK(r.value == rb.value);
  CHECK(r.i == rb.i);
  CHECK(r.j == rb.j);

  const std::vector<Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const auto s = diameter_calipers(square);
  CHECK(s.i == 0);
  CHECK(s.j == 2);

  // duplicates and fully degenerate clouds
  const std::vector<Point> dup{{1, 1}, {0, 0}, {1, 1}, {-0.0, 0.0}};
  const auto d = diameter_calipers(dup);
  const auto db = diameter_bruteforce(dup);
  CHECK(d.value == db.value);
  CHECK(d.i == db.i);
  CHECK(d.j == db.j);

  const std::vector<Point> same{{2, 3}, {2, 3}, {2, 3}};
  const auto z = diameter_calipers(same);
  CHECK(z.value == 0.0);
  CHECK(z.i == 0);
  CHECK(z.j == 1);

  CHECK_THROWS_AS(diameter_calipers(std::vector<Point>{{1, 2}}),
                  std::invalid_argument);
}

TEST_CASE("calipers vs brute force: 64 uniform points in the unit disk") {
  RngStream rng(64);
  std::vector<Point> pts;
  for (int i = 0; i < 64; ++i) {
    const double r = std::sqrt(rng.next_double());
    const double t = 2.0 * std::numbers::pi * rng.next_double();
    pts.push_back({r * std::cos(t), r * std::sin(t)});
  }
  const auto c = diameter_calipers(pts);
  const auto b = diameter_bruteforce(pts);
  CHECK(c.value == b.value);
  CHECK(c.i == b.i);
  CHECK(c.j == b.j);
}

TEST_CASE("calipers vs brute force on random clouds, exact squared match") {
  RngStream rng(2002);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 255);
    auto pts = random_cloud(rng, n, 3.0);
    if (trial % 5 == 0 && n >= 4) {
      pts[n / 2] = pts[0];  // plant exact duplicates
      pts[n - 1] = pts[1];
    }
    if (trial % 7 == 0) {  // snap to a coarse grid to force ties
      for (auto& p : pts) {
        p.x = std::round(p.x * 4.0) / 4.0;
        p.y = std::round(p.y * 4.0) / 4.0;
      }
    }
    const auto c = diameter_calipers(pts);
    const auto b = diameter_bruteforce(pts);
    REQUIRE(c.value * c.value ==
            doctest::Approx(b.value * b.value).epsilon(1e-12));
    REQUIRE(c.i == b.i);
    REQUIRE(c.j == b.j);
  }
}

TEST_CASE("fold_to_pole on the spec examples") {
  const auto f1 = fold_to_pole({-1.0, 0.1});
  CHECK(f1.quadrant == 2);
  CHECK(f1.w ==
        doctest::Approx(std::numbers::pi - std::atan2(0.1, -1.0)).epsilon(1e-15));
  CHECK(f1.w == doctest::Approx(0.0997).epsilon(1e-3));

  const auto f4 = fold_to_pole({0.5, -0.5});
  CHECK(f4.quadrant == 4);
  CHECK(f4.w == doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-15));

  const auto f0 = fold_to_pole({1.0, 0.0});
  CHECK(f0.quadrant == 1);
  CHECK(f0.w == 0.0);

  CHECK_THROWS_AS(fold_to_pole({0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("fold/unfold and polar round trips") {
  RngStream rng(3003);
  for (int i = 0; i < 20000; ++i) {
    const Point p{4.0 * (rng.next_double() - 0.5),
                  4.0 * (rng.next_double() - 0.5)};
    const auto polar = to_polar(p);
    REQUIRE(polar.phi >= 0.0);
    REQUIRE(polar.phi < 2.0 * std::numbers::pi);
    const Point back = from_polar(polar);
    const double scale = std::max(1e-30, std::hypot(p.x, p.y));
    REQUIRE(std::hypot(back.x - p.x, back.y - p.y) <= 1e-12 * scale);

    const auto folded = fold_to_pole(p);
    REQUIRE(folded.w >= 0.0);
    REQUIRE(folded.w <= std::numbers::pi / 2.0 + 1e-15);
    const Point rec = from_polar({polar.r, unfold_angle(folded)});
    REQUIRE(std::hypot(rec.x - p.x, rec.y - p.y) <= 1e-12 * scale);
  }
}

TEST_CASE("pole distance expansion: formula values") {
  CHECK(pole_distance_expansion(1.0, 0.0, 1.0, 0.0, 1.0, PairMode::Opposite) ==
        2.0);
  CHECK(pole_distance_expansion(2.0, 0.0, 2.0, 0.0, 2.0, PairMode::SameSide) ==
        4.0);
  CHECK(pole_distance_expansion(1.0, 0.01, 1.0, 0.0, 1.0, PairMode::Opposite) ==
        doctest::Approx(1.999975).epsilon(1e-12));
  // same-side mode adds the angles
  CHECK(pole_distance_expansion(1.0, 0.01, 1.0, 0.01, 1.0, PairMode::SameSide) ==
        doctest::Approx(2.0 - 0.25 * 4e-4).epsilon(1e-12));
}

TEST_CASE("pole distance expansion: deficiency ratio tends to 1") {
  // exact law-of-cosines distance as the oracle
  auto exact = [](double r1, double w1, double r2, double w2) {
    return std::sqrt(r1 * r1 + r2 * r2 + 2.0 * r1 * r2 * std::cos(w1 - w2));
  };
  double prev_err = 1e9;
  for (double delta : {1e-2, 1e-3, 1e-4, 1e-5}) {
    const double r = 1.0 - delta;
    const double w = std::sqrt(delta);
    const double ex = exact(r, w, r, 0.0);
    const double ap =
        pole_distance_expansion(r, w, r, 0.0, 1.0, PairMode::Opposite);
    const double ratio = (2.0 - ex) / (2.0 - ap);
    const double err = std::fabs(ratio - 1.0);
    REQUIRE(err < prev_err);  // monotone approach to 1 on the grid
    prev_err = err;
  }
  CHECK(prev_err < 1e-4);
}
