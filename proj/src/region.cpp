#include "maxdist/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "maxdist/quadrature.hpp"

namespace maxdist {
namespace {

constexpr double kQuadratureTol = 1e-12;
constexpr double kBisectionTol = 1e-13;

double sign_of_quadrant(int quadrant) {  // x-axis side
  return (quadrant == 1 || quadrant == 4) ? 1.0 : -1.0;
}

bool upper_quadrant(int quadrant) { return quadrant == 1 || quadrant == 2; }

}  // namespace

QuadrantConstants constants(double q, double p, double a) {
  if (!(q > 0.0) || !(q < 2.0))
    throw std::domain_error(
        "shape constant q out of (0,2) (circle-like pole excluded)");
  if (!(p > 0.0) || !(a > 0.0) || !std::isfinite(p) || !std::isfinite(a))
    throw std::domain_error("invalid region parameter");
  QuadrantConstants k;
  k.c = 2.0 * q * std::sqrt(2.0 * a) / (3.0 * std::sqrt(4.0 - q * q));
  k.sigma = std::pow(p * k.c, -2.0 / 3.0);
  k.tau = 3.0 / (2.0 * a) * k.c;
  return k;
}

int RegionSpec::check_quadrant(int quadrant) {
  if (quadrant < 1 || quadrant > 4)
    throw std::invalid_argument("quadrant index must be in 1..4");
  return quadrant - 1;
}

RegionSpec RegionSpec::ellipse(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("degenerate");
  if (b >= a) throw std::domain_error("no unique major axis (A2 violated)");
  RegionSpec r;
  r.kind_ = RegionKind::Ellipse;
  r.a_ = a;
  r.nu_ = 0.0;
  r.area_ = std::numbers::pi * a * b;
  r.q_.fill(2.0 * b / a);
  r.p_.fill(1.0 / r.area_);
  r.semi_minor_.fill(b);
  r.bounding_half_height_ = b;
  return r;
}

RegionSpec RegionSpec::quarter_ellipse(double a, const std::array<double, 4>& b) {
  if (!(a > 0.0)) throw std::domain_error("degenerate");
  for (double bi : b) {
    if (!(bi > 0.0)) throw std::domain_error("degenerate");
    if (bi >= a) throw std::domain_error("no unique major axis (A2 violated)");
  }
  RegionSpec r;
  r.kind_ = RegionKind::QuarterEllipse;
  r.a_ = a;
  r.nu_ = 0.0;
  r.area_ = std::numbers::pi / 4.0 * a * (b[0] + b[1] + b[2] + b[3]);
  for (int i = 0; i < 4; ++i) {
    r.q_[i] = 2.0 * b[i] / a;
    r.p_[i] = 1.0 / r.area_;
    r.semi_minor_[i] = b[i];
  }
  r.bounding_half_height_ = std::max(std::max(b[0], b[1]), std::max(b[2], b[3]));
  return r;
}

RegionSpec RegionSpec::custom(CustomParams params) {
  if (!(params.a > 0.0)) throw std::domain_error("degenerate");
  if (!(params.nu >= 0.0) || !(params.nu < params.a))
    throw std::domain_error("invalid region parameter");
  if (!params.relaxed_a7 &&
      (params.p[0] != params.p[3] || params.p[1] != params.p[2]))
    throw std::domain_error(
        "pole densities must satisfy p1 = p4 and p2 = p3 (A7); "
        "enable the relaxed variant to lift this");
  RegionSpec r;
  r.kind_ = RegionKind::Custom;
  r.a_ = params.a;
  r.nu_ = params.nu;
  r.area_ = params.area;
  r.q_ = params.q;
  r.p_ = params.p;
  r.semi_minor_.fill(0.0);
  r.boundary_ = std::move(params.boundary);
  r.contains_ = std::move(params.contains);
  r.bounding_half_height_ = params.bounding_half_height;
  r.relaxed_a7_ = params.relaxed_a7;
  return r;
}

double RegionSpec::semi_minor(int quadrant) const {
  const int i = check_quadrant(quadrant);
  if (kind_ == RegionKind::Custom)
    throw std::domain_error("custom region has no preset semi-minor axis");
  return semi_minor_[i];
}

double RegionSpec::boundary(int quadrant, double x) const {
  const int i = check_quadrant(quadrant);
  if (kind_ == RegionKind::Custom) {
    if (!boundary_[i]) throw std::domain_error("boundary evaluator missing");
    return boundary_[i](x);
  }
  const double arg = a_ * a_ - x * x;
  const double mag = semi_minor_[i] / a_ * std::sqrt(arg > 0.0 ? arg : 0.0);
  return upper_quadrant(quadrant) ? mag : -mag;
}

bool RegionSpec::contains(Point pt, double tol) const {
  if (kind_ == RegionKind::Custom) {
    if (!contains_) throw std::domain_error("membership predicate missing");
    return contains_(pt);
  }
  const int quad = quadrant_of(pt);
  const double b = semi_minor_[quad - 1];
  const double sx = pt.x / (a_ + tol);
  const double sy = pt.y / (b + tol);
  return sx * sx + sy * sy <= 1.0;
}

QuadrantConstants RegionSpec::quadrant_constants(int quadrant) const {
  const int i = check_quadrant(quadrant);
  return constants(q_[i], p_[i], a_);
}

double cap_intersection_abscissa(const RegionSpec& region, int quadrant,
                                 double h) {
  const double a = region.a();
  if (!(h > 0.0) || !(h < a)) throw std::domain_error("cap undefined");

  if (region.kind() != RegionKind::Custom) {
    const double b = region.semi_minor(quadrant);
    if (h >= a - b) throw std::domain_error("cap undefined");
    const double num = (a - h) * (a - h) - b * b;
    return a * std::sqrt(num / (a * a - b * b));
  }

  // Bisection for x^2 + g(x)^2 = (a-h)^2 on (nu, a); A6 gives uniqueness.
  const double s = sign_of_quadrant(quadrant);
  const double rr = (a - h) * (a - h);
  auto f = [&](double x) {
    const double g = region.boundary(quadrant, s * x);
    return x * x + g * g - rr;
  };
  double lo = region.nu();
  double hi = a;
  if (!(f(lo) < 0.0 && f(hi) > 0.0))
    throw std::domain_error("A6 violated for this h");
  while (hi - lo > kBisectionTol) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double cap_area(const RegionSpec& region, int quadrant, double h) {
  const double a = region.a();
  const double xbar = cap_intersection_abscissa(region, quadrant, h);
  const double s = sign_of_quadrant(quadrant);
  const double rr = (a - h) * (a - h);

  auto profile = [&](double x) {
    return std::fabs(region.boundary(quadrant, s * x));
  };
  auto circle = [&](double x) {
    const double arg = rr - x * x;
    return arg > 0.0 ? std::sqrt(arg) : 0.0;
  };

  // Between the boundary and the circular arc up to a-h, then under the
  // boundary alone; split keeps the sqrt endpoints local.
  const double inner = integrate(
      [&](double x) { return profile(x) - circle(x); }, xbar, a - h,
      0.5 * kQuadratureTol);
  const double outer = integrate(profile, a - h, a, 0.5 * kQuadratureTol);
  return inner + outer;
}

double cap_angle(const RegionSpec& region, int quadrant, double h) {
  const double a = region.a();
  const double xbar = cap_intersection_abscissa(region, quadrant, h);
  const double arg = (a - h) * (a - h) - xbar * xbar;
  const double y = arg > 0.0 ? std::sqrt(arg) : 0.0;
  return std::atan2(y, xbar);
}

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.advisory && !c.passed) return false;
  return true;
}

ValidationReport validate(const RegionSpec& region) {
  ValidationReport report;
  const double a = region.a();

  auto add = [&](std::string name, bool passed, bool advisory,
                 std::string detail) {
    report.checks.push_back(
        {std::move(name), passed, advisory, std::move(detail)});
  };

  for (int quad = 1; quad <= 4; ++quad) {
    const double q = region.q(quad);
    std::ostringstream d;
    d << "q_" << quad << " = " << q;
    add("A5/shape-constant range: 0 < q_" + std::to_string(quad) + " < 2",
        q > 0.0 && q < 2.0, false, d.str());
  }

  for (int quad = 1; quad <= 4; ++quad) {
    const double p = region.p(quad);
    std::ostringstream d;
    d << "p_" << quad << " = " << p;
    add("A7/pole density positive: p_" + std::to_string(quad) + " > 0",
        p > 0.0, false, d.str());
  }

  {
    const bool sym =
        region.p(1) == region.p(4) && region.p(2) == region.p(3);
    add("A7/pole density symmetry: p1 = p4, p2 = p3",
        sym || region.relaxed_a7(), false,
        region.relaxed_a7() ? "relaxed variant enabled" : "");
  }

  // A4: boundary vanishes at the poles and keeps its sign on the domain.
  for (int quad = 1; quad <= 4; ++quad) {
    const double pole = sign_of_quadrant(quad) * a;
    double g_pole;
    bool evaluable = true;
    try {
      g_pole = region.boundary(quad, pole);
    } catch (const std::exception&) {
      g_pole = std::numeric_limits<double>::quiet_NaN();
      evaluable = false;
    }
    std::ostringstream d;
    d << "|g_" << quad << "(pole)| = " << std::fabs(g_pole);
    add("A4/boundary zero at pole: g_" + std::to_string(quad),
        evaluable && std::fabs(g_pole) <= 1e-9 * a, false, d.str());
  }
  for (int quad = 1; quad <= 4; ++quad) {
    const double s = sign_of_quadrant(quad);
    const double lo = region.nu() + 1e-9 * a;
    bool sign_ok = true;
    for (int k = 0; k <= 64; ++k) {
      const double x = s * (lo + (a - lo) * static_cast<double>(k) / 64.0);
      const double g = region.boundary(quad, x);
      const bool want_nonneg = upper_quadrant(quad);
      if (want_nonneg ? g < -1e-12 * a : g > 1e-12 * a) {
        sign_ok = false;
        break;
      }
    }
    add("A4/boundary sign: g_" + std::to_string(quad) +
            (upper_quadrant(quad) ? " >= 0" : " <= 0"),
        sign_ok, false, "");
  }

  // A5 decay rate near the poles: g_i/f_a close to q_i at offset 1e-6.
  // The assumption states a limit only, so the 5% threshold is advisory.
  for (int quad = 1; quad <= 4; ++quad) {
    const double s = sign_of_quadrant(quad);
    const double x = s * (a - 1e-6);
    const double fa = std::sqrt(a * a - x * x) / 2.0;
    const double ratio = std::fabs(region.boundary(quad, x)) / fa;
    const double q = region.q(quad);
    std::ostringstream d;
    d << "g_" << quad << "/f_a = " << ratio << ", q_" << quad << " = " << q;
    add("A5/decay rate (advisory): g_" + std::to_string(quad) +
            "/f_a within 5% of q at pole offset 1e-6",
        q > 0.0 && std::fabs(ratio - q) <= 0.05 * q, true, d.str());
  }

  return report;
}

}  // namespace maxdist
