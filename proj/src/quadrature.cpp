#include "maxdist/quadrature.hpp"

#include <cmath>

namespace maxdist {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1,1],
// stored as {abscissa, gauss weight, kronrod weight} for the symmetric half.
constexpr double kNodes[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

struct RuleResult {
  double value;
  double error;
};

RuleResult gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double f0 = f(mid);
  double g7 = kNodes[0][1] * f0;
  double k15 = kNodes[0][2] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kNodes[i][0];
    const double fs = f(mid + dx) + f(mid - dx);
    g7 += kNodes[i][1] * fs;
    k15 += kNodes[i][2] * fs;
  }
  g7 *= half;
  k15 *= half;
  return {k15, std::fabs(k15 - g7)};
}

double refine(const std::function<double(double)>& f, double lo, double hi,
              double tol, int depth) {
  const RuleResult r = gk15(f, lo, hi);
  if (r.error <= tol || depth >= 52 || hi - lo <= 0.0) return r.value;
  const double mid = 0.5 * (lo + hi);
  return refine(f, lo, mid, 0.5 * tol, depth + 1) +
         refine(f, mid, hi, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol) {
  if (lo >= hi) return 0.0;
  return refine(f, lo, hi, abs_tol, 0);
}

}  // namespace maxdist
