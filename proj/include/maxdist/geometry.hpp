#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace maxdist {

struct Point {
  double x{0.0};
  double y{0.0};
};

// Polar form with r >= 0 and phi in [0, 2*pi).
struct PolarPoint {
  double r{0.0};
  double phi{0.0};
};

// Polar angle folded toward the nearest pole: w is measured from the major
// axis into the quadrant, so w in [0, pi/2] on the closed quadrant.
struct FoldedAngle {
  int quadrant{1};  // 1..4, anti-clockwise
  double w{0.0};
};

// Which folded angles combine in the two-pole distance expansion:
// Opposite  - diagonal quadrant pairs (1,3), (2,4); angles subtract.
// SameSide  - pairs (1,2), (3,4) in one half-plane; angles add.
enum class PairMode { Opposite, SameSide };

struct DiameterResult {
  double value{0.0};
  std::size_t i{0};
  std::size_t j{0};  // attaining pair, i < j
};

PolarPoint to_polar(Point p);
Point from_polar(const PolarPoint& q);

inline double squared_distance(Point p, Point q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return dx * dx + dy * dy;
}

// Quadrant assignment with the deterministic axis tie rule:
// x>=0 & y>=0 -> 1, x<0 & y>=0 -> 2, x<0 & y<0 -> 3, x>=0 & y<0 -> 4.
int quadrant_of(Point p);

// O(n^2) reference diameter. Ties broken by lexicographically smallest
// index pair. Throws on fewer than 2 points.
DiameterResult diameter_bruteforce(std::span<const Point> points);

// Convex hull (monotone chain), counter-clockwise, starting at the
// lexicographically smallest vertex, collinear points dropped.
std::vector<Point> convex_hull(std::span<const Point> points);

// O(n log n) diameter via rotating calipers on the hull. Same value and
// same attaining index pair as diameter_bruteforce.
DiameterResult diameter_calipers(std::span<const Point> points);

FoldedAngle fold_to_pole(Point p);

// Inverse of the folding map: polar angle phi in [0, 2*pi) for a folded
// angle, so from_polar({r, unfold_angle(f)}) reconstructs the point.
double unfold_angle(const FoldedAngle& f);

// Leading-order two-pole distance: r1 + r2 - (a/4) * (w1 -+ w2)^2, the
// law-of-cosines expansion with the remainder dropped.
double pole_distance_expansion(double r1, double w1, double r2, double w2,
                               double a, PairMode mode);

}  // namespace maxdist
