#pragma once

#include <cstddef>
#include <vector>

namespace maxdist {

// Right-continuous empirical distribution function over a sorted sample.
class EmpiricalCDF {
 public:
  // Sorts the samples; throws on an empty set.
  explicit EmpiricalCDF(std::vector<double> samples);

  // (# samples <= t) / count
  double eval(double t) const;

  // Order statistic at index ceil(p * count), 1-based; p in (0,1).
  double quantile(double p) const;

  std::size_t count() const { return sorted_.size(); }
  const std::vector<double>& sorted() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

// Exact two-sample Kolmogorov-Smirnov distance: sup of |F1 - F2| over the
// merged jump points.
double ks_distance(const EmpiricalCDF& e1, const EmpiricalCDF& e2);

}  // namespace maxdist
