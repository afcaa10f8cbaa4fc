#include "maxdist/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace maxdist {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

Point sample_ellipse_point(double a, double b, RngStream& rng) {
  const double r = std::sqrt(rng.next_double());
  const double theta = 2.0 * std::numbers::pi * rng.next_double();
  return {a * r * std::cos(theta), b * r * std::sin(theta)};
}

Point sample_quarter_ellipse_point(const RegionSpec& region, RngStream& rng) {
  // Quadrant proportional to quadrant area (pi/4 * a * b_i), then a
  // quarter-disk transform stretched to that quadrant's semi axes.
  const double bsum = region.semi_minor(1) + region.semi_minor(2) +
                      region.semi_minor(3) + region.semi_minor(4);
  const double u = rng.next_double() * bsum;
  int quad = 1;
  double acc = region.semi_minor(1);
  while (quad < 4 && u >= acc) {
    ++quad;
    acc += region.semi_minor(quad);
  }
  const double r = std::sqrt(rng.next_double());
  const double theta = kHalfPi * rng.next_double();
  const double sx = (quad == 1 || quad == 4) ? 1.0 : -1.0;
  const double sy = (quad == 1 || quad == 2) ? 1.0 : -1.0;
  return {sx * region.a() * r * std::cos(theta),
          sy * region.semi_minor(quad) * r * std::sin(theta)};
}

Point sample_custom_point(const RegionSpec& region, RngStream& rng) {
  const double a = region.a();
  const double hh = region.bounding_half_height();
  for (int miss = 0; miss < 1000000; ++miss) {
    const Point pt{a * (2.0 * rng.next_double() - 1.0),
                   hh * (2.0 * rng.next_double() - 1.0)};
    if (region.contains(pt)) return pt;
  }
  throw std::runtime_error("sampler stalled (region area anomaly)");
}

}  // namespace

Point sample_point(const RegionSpec& region, RngStream& rng) {
  switch (region.kind()) {
    case RegionKind::Ellipse:
      return sample_ellipse_point(region.a(), region.semi_minor(1), rng);
    case RegionKind::QuarterEllipse:
      return sample_quarter_ellipse_point(region, rng);
    case RegionKind::Custom:
      return sample_custom_point(region, rng);
  }
  throw std::logic_error("unknown region kind");
}

Cloud sample_cloud(const RegionSpec& region, std::uint64_t n, Regime regime,
                   const SeedSpec& seed) {
  if (n < 1) throw std::invalid_argument("cloud intensity n must be >= 1");
  RngStream rng(child_seed(seed));
  Cloud cloud;
  cloud.regime = regime;
  cloud.nominal_n = n;
  const std::uint64_t count =
      regime == Regime::Poissonized
          ? rng.next_poisson(static_cast<double>(n))
          : n;
  cloud.points.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i)
    cloud.points.push_back(sample_point(region, rng));
  return cloud;
}

double scaled_deficiency(const Cloud& cloud, double a) {
  if (cloud.points.size() < 2) throw std::runtime_error("statistic undefined");
  const double diam = diameter_calipers(cloud.points).value;
  const double scale =
      std::pow(static_cast<double>(cloud.nominal_n), 2.0 / 3.0);
  return scale * (2.0 * a - diam);
}

QuadrantSplitReport quadrant_split_diagnostic(const Cloud& cloud,
                                              double /*a*/) {
  if (cloud.points.size() < 2) throw std::runtime_error("statistic undefined");

  QuadrantSplitReport report;
  report.diameter = diameter_calipers(cloud.points).value;

  std::array<std::vector<Point>, 4> by_quad;
  for (const Point& pt : cloud.points)
    by_quad[quadrant_of(pt) - 1].push_back(pt);
  std::array<std::vector<Point>, 4> hulls;
  for (int i = 0; i < 4; ++i) {
    report.quadrant_counts[i] = by_quad[i].size();
    if (by_quad[i].empty())
      report.empty_quadrants.push_back(i + 1);
    else
      hulls[i] = convex_hull(by_quad[i]);
  }

  // Max cross-set distance is attained at hull vertices.
  constexpr int pairs[4][2] = {{1, 2}, {1, 3}, {2, 4}, {3, 4}};
  double best_sq = -1.0;
  for (const auto& pr : pairs) {
    const auto& ha = hulls[pr[0] - 1];
    const auto& hb = hulls[pr[1] - 1];
    if (ha.empty() || hb.empty()) continue;
    double pair_sq = -1.0;
    for (const Point& pa : ha)
      for (const Point& pb : hb)
        pair_sq = std::max(pair_sq, squared_distance(pa, pb));
    if (pair_sq > best_sq) {
      best_sq = pair_sq;
      report.quad_i = pr[0];
      report.quad_j = pr[1];
    }
  }

  if (best_sq >= 0.0) {
    report.cross_defined = true;
    report.cross_max = std::sqrt(best_sq);
    report.coincide = report.cross_max == report.diameter;
  }
  return report;
}

}  // namespace maxdist
