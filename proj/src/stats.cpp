#include "maxdist/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace maxdist {

EmpiricalCDF::EmpiricalCDF(std::vector<double> samples)
    : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw std::invalid_argument("empty sample set");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCDF::eval(double t) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), t);
  return static_cast<double>(it - sorted_.begin()) /
         static_cast<double>(sorted_.size());
}

double EmpiricalCDF::quantile(double p) const {
  if (!(p > 0.0) || !(p < 1.0))
    throw std::invalid_argument("quantile level must be in (0,1)");
  const auto n = static_cast<double>(sorted_.size());
  auto rank = static_cast<std::size_t>(std::ceil(p * n));
  if (rank < 1) rank = 1;
  if (rank > sorted_.size()) rank = sorted_.size();
  return sorted_[rank - 1];
}

double ks_distance(const EmpiricalCDF& e1, const EmpiricalCDF& e2) {
  const auto& a = e1.sorted();
  const auto& b = e2.sorted();
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double sup = 0.0;
  std::size_t ia = 0;
  std::size_t ib = 0;
  while (ia < a.size() || ib < b.size()) {
    const double t = (ib >= b.size() || (ia < a.size() && a[ia] <= b[ib]))
                         ? a[ia]
                         : b[ib];
    while (ia < a.size() && a[ia] <= t) ++ia;
    while (ib < b.size() && b[ib] <= t) ++ib;
    sup = std::max(sup, std::fabs(static_cast<double>(ia) / na -
                                  static_cast<double>(ib) / nb));
  }
  return sup;
}

}  // namespace maxdist
