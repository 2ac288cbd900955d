#include "qsa/growth.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace qsa {

GrowthFit fit_growth(const std::vector<long>& ns, const std::vector<double>& dims) {
  if (ns.size() != dims.size() || ns.size() < 3) throw std::invalid_argument("need at least three (n, d) points");
  const auto rows = static_cast<Eigen::Index>(ns.size());
  Eigen::MatrixXd A(rows, 3);
  Eigen::VectorXd y(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const double n = static_cast<double>(ns[static_cast<std::size_t>(r)]);
    const double d = dims[static_cast<std::size_t>(r)];
    if (n <= 0 || d <= 0) throw std::invalid_argument("growth data must be positive");
    A(r, 0) = std::log(n);
    A(r, 1) = 1.0;
    A(r, 2) = 1.0 / n;
    y(r) = std::log(d);
  }
  const Eigen::Vector3d x = A.colPivHouseholderQr().solve(y);
  return {x(0), x(1), x(2)};
}

double log_ratio_slope(long n0, double d0, long n1, double d1) {
  if (n0 <= 0 || n1 <= 0 || n0 == n1 || d0 <= 0 || d1 <= 0) throw std::invalid_argument("bad growth data");
  return std::log(d1 / d0) / std::log(static_cast<double>(n1) / static_cast<double>(n0));
}

}  // namespace qsa
