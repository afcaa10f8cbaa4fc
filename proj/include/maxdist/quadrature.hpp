#pragma once

#include <functional>

namespace maxdist {

// Adaptive Gauss-Kronrod 7/15 quadrature to an absolute tolerance.
// Bisects intervals whose error estimate exceeds their share of the budget;
// handles integrands with square-root derivative singularities at the
// endpoints (the cap boundaries) by local refinement.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol);

}  // namespace maxdist
