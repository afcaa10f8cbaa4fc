#include "maxdist/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace maxdist {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Hull vertex positions in CCW order together with the smallest original
// index at each position (duplicates collapse to their first occurrence).
struct IndexedHull {
  std::vector<Point> pts;
  std::vector<std::size_t> idx;
};

IndexedHull hull_with_indices(std::span<const Point> points) {
  const std::size_t n = points.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].x != points[b].x) return points[a].x < points[b].x;
    if (points[a].y != points[b].y) return points[a].y < points[b].y;
    return a < b;  // keeps the smallest index first among duplicates
  });
  // drop exact duplicates
  std::vector<std::size_t> uniq;
  uniq.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!uniq.empty()) {
      const Point& prev = points[uniq.back()];
      const Point& cur = points[order[k]];
      if (prev.x == cur.x && prev.y == cur.y) continue;
    }
    uniq.push_back(order[k]);
  }

  auto build = [&](std::vector<std::size_t>& out, bool lower) {
    const std::size_t m = uniq.size();
    for (std::size_t t = 0; t < m; ++t) {
      const std::size_t k = lower ? t : m - 1 - t;
      const Point p = points[uniq[k]];
      while (out.size() >= 2 &&
             cross(points[out[out.size() - 2]], points[out.back()], p) <= 0.0)
        out.pop_back();
      out.push_back(uniq[k]);
    }
  };

  IndexedHull h;
  if (uniq.size() <= 2) {
    h.idx = uniq;
  } else {
    std::vector<std::size_t> lower, upper;
    build(lower, true);
    build(upper, false);
    lower.pop_back();
    upper.pop_back();
    h.idx = std::move(lower);
    h.idx.insert(h.idx.end(), upper.begin(), upper.end());
  }
  h.pts.reserve(h.idx.size());
  for (std::size_t i : h.idx) h.pts.push_back(points[i]);
  return h;
}

struct PairCandidate {
  double d2;
  std::size_t i, j;  // original indices, i < j
};

void consider(std::span<const Point> points, const IndexedHull& h,
              std::size_t u, std::size_t v, PairCandidate& best) {
  if (u == v) return;
  std::size_t i = h.idx[u];
  std::size_t j = h.idx[v];
  if (i > j) std::swap(i, j);
  const double d2 = squared_distance(points[i], points[j]);
  if (d2 > best.d2 || (d2 == best.d2 && (i < best.i || (i == best.i && j < best.j)))) {
    best = {d2, i, j};
  }
}

}  // namespace

PolarPoint to_polar(Point p) {
  const double r = std::hypot(p.x, p.y);
  double phi = std::atan2(p.y, p.x);
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
  return {r, phi};
}

Point from_polar(const PolarPoint& q) {
  return {q.r * std::cos(q.phi), q.r * std::sin(q.phi)};
}

int quadrant_of(Point p) {
  if (p.x >= 0.0) return p.y >= 0.0 ? 1 : 4;
  return p.y >= 0.0 ? 2 : 3;
}

DiameterResult diameter_bruteforce(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("degenerate cloud");
  PairCandidate best{-1.0, 0, 0};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d2 = squared_distance(points[i], points[j]);
      if (d2 > best.d2) best = {d2, i, j};
    }
  }
  return {std::sqrt(best.d2), best.i, best.j};
}

std::vector<Point> convex_hull(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  return hull_with_indices(points).pts;
}

DiameterResult diameter_calipers(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("degenerate cloud");

  const IndexedHull h = hull_with_indices(points);
  const std::size_t m = h.pts.size();
  if (m == 1) return {0.0, 0, 1};  // all points coincide
  if (m == 2) {
    std::size_t i = h.idx[0], j = h.idx[1];
    if (i > j) std::swap(i, j);
    return {std::sqrt(squared_distance(h.pts[0], h.pts[1])), i, j};
  }

  // Rotating calipers: advance the point farthest from each hull edge; on
  // area ties (parallel edges) both farthest vertices are candidates.
  auto area2 = [&](std::size_t e0, std::size_t e1, std::size_t v) {
    return std::fabs(cross(h.pts[e0], h.pts[e1], h.pts[v]));
  };
  PairCandidate best{-1.0, 0, 0};
  std::size_t j = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t ni = (i + 1) % m;
    while (area2(i, ni, (j + 1) % m) > area2(i, ni, j)) j = (j + 1) % m;
    consider(points, h, i, j, best);
    consider(points, h, ni, j, best);
    if (area2(i, ni, (j + 1) % m) == area2(i, ni, j)) {
      consider(points, h, i, (j + 1) % m, best);
      consider(points, h, ni, (j + 1) % m, best);
    }
  }
  return {std::sqrt(best.d2), best.i, best.j};
}

FoldedAngle fold_to_pole(Point p) {
  if (p.x == 0.0 && p.y == 0.0) throw std::invalid_argument("undefined angle");
  const int quad = quadrant_of(p);
  const double phi = to_polar(p).phi;
  double w = 0.0;
  switch (quad) {
    case 1: w = phi; break;
    case 2: w = std::numbers::pi - phi; break;
    case 3: w = phi - std::numbers::pi; break;
    default: w = kTwoPi - phi; break;
  }
  if (w < 0.0) w = 0.0;  // guard fp fuzz on axis points
  return {quad, w};
}

double unfold_angle(const FoldedAngle& f) {
  double phi = 0.0;
  switch (f.quadrant) {
    case 1: phi = f.w; break;
    case 2: phi = std::numbers::pi - f.w; break;
    case 3: phi = std::numbers::pi + f.w; break;
    case 4: phi = kTwoPi - f.w; break;
    default: throw std::invalid_argument("quadrant out of range");
  }
  if (phi >= kTwoPi) phi -= kTwoPi;
  if (phi < 0.0) phi += kTwoPi;
  return phi;
}

double pole_distance_expansion(double r1, double w1, double r2, double w2,
                               double a, PairMode mode) {
  const double delta = mode == PairMode::Opposite ? w1 - w2 : w1 + w2;
  return r1 + r2 - (a / 4.0) * delta * delta;
}

}  // namespace maxdist
