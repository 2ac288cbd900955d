#pragma once

#include <vector>

namespace qsa {

struct GrowthFit {
  double exponent = 0;    // k
  double constant = 0;    // c
  double correction = 0;  // b
};

/// Least squares fit of log d(n) = k log n + c + b / n.
/// Throws std::invalid_argument with fewer than three points or d(n) <= 0.
GrowthFit fit_growth(const std::vector<long>& ns, const std::vector<double>& dims);

/// log(d1 / d0) / log(n1 / n0).
double log_ratio_slope(long n0, double d0, long n1, double d1);

}  // namespace qsa
