#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "maxdist/geometry.hpp"

namespace maxdist {

// Per-quadrant constants of the limit law:
//   c     = 2*q*sqrt(2a) / (3*sqrt(4 - q^2))   (cap-area coefficient)
//   sigma = (p*c)^(-2/3)                       (scaled-norm-deficiency scale)
//   tau   = 3*c / (2a)                         (scaled-angle coefficient)
struct QuadrantConstants {
  double c{0.0};
  double sigma{0.0};
  double tau{0.0};
};

// Validates 0 < q < 2 (a circle-like pole is excluded), p > 0, a > 0.
QuadrantConstants constants(double q, double p, double a);

enum class RegionKind { Ellipse, QuarterEllipse, Custom };

// A planar region with a unique major axis [-a, a] whose boundary decays
// like a square root at the poles. Quadrants are numbered 1..4
// anti-clockwise; boundary functions g_1, g_2 >= 0 and g_3, g_4 <= 0.
class RegionSpec {
 public:
  struct CustomParams {
    double a{1.0};
    double nu{0.0};  // boundary functions only constrain |x| > nu
    std::array<double, 4> q{};
    std::array<double, 4> p{};
    // Signed boundary evaluators; domain [nu, a] for quadrants 1,4 and
    // [-a, -nu] for quadrants 2,3.
    std::array<std::function<double(double)>, 4> boundary{};
    std::function<bool(Point)> contains;
    double bounding_half_height{1.0};  // rejection-sampling box half height
    double area{1.0};
    bool relaxed_a7{false};  // permit p1 != p4 or p2 != p3
  };

  // Uniform distribution in the ellipse x^2/a^2 + y^2/b^2 <= 1, 0 < b < a.
  static RegionSpec ellipse(double a, double b);

  // Quadrant i bounded by a quarter ellipse with semi-minor axis b[i-1];
  // uniform density on the union.
  static RegionSpec quarter_ellipse(double a, const std::array<double, 4>& b);

  static RegionSpec custom(CustomParams params);

  RegionKind kind() const { return kind_; }
  double a() const { return a_; }
  double area() const { return area_; }
  double nu() const { return nu_; }
  bool relaxed_a7() const { return relaxed_a7_; }
  double q(int quadrant) const { return q_[check_quadrant(quadrant)]; }
  double p(int quadrant) const { return p_[check_quadrant(quadrant)]; }

  // Semi-minor axis of the given quadrant (presets only).
  double semi_minor(int quadrant) const;

  // Signed boundary g_i(x); x in [nu, a] for quadrants 1,4 and [-a, -nu]
  // for quadrants 2,3.
  double boundary(int quadrant, double x) const;

  // Membership, inflated by an absolute slack in length units.
  bool contains(Point pt, double tol = 0.0) const;

  double bounding_half_height() const { return bounding_half_height_; }

  QuadrantConstants quadrant_constants(int quadrant) const;

 private:
  static int check_quadrant(int quadrant);

  RegionKind kind_{RegionKind::Ellipse};
  double a_{1.0};
  double nu_{0.0};
  double area_{0.0};
  std::array<double, 4> q_{};
  std::array<double, 4> p_{};
  std::array<double, 4> semi_minor_{};  // presets
  std::array<std::function<double(double)>, 4> boundary_{};
  std::function<bool(Point)> contains_;
  double bounding_half_height_{0.0};
  bool relaxed_a7_{false};
};

// Abscissa |x| of the unique intersection of the quadrant boundary with the
// circle of radius a-h (closed form for presets, bisection otherwise).
double cap_intersection_abscissa(const RegionSpec& region, int quadrant,
                                 double h);

// Lebesgue area of the cap A_i(h) = E_i \ B(h), by adaptive quadrature to
// absolute tolerance 1e-12. Asymptotically c_i * h^(3/2).
double cap_area(const RegionSpec& region, int quadrant, double h);

// Folded polar angle of the boundary/circle intersection point.
// Asymptotically tau_i * h^(1/2).
double cap_angle(const RegionSpec& region, int quadrant, double h);

struct ValidationCheck {
  std::string name;
  bool passed{false};
  bool advisory{false};
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  // All non-advisory checks passed.
  bool ok() const;
};

// Checkable subset of the region assumptions: shape-constant range, pole
// densities, boundary zeros and signs, pole-density symmetry, and an
// advisory square-root-decay rate check near the poles.
ValidationReport validate(const RegionSpec& region);

}  // namespace maxdist
