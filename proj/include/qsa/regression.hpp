#ifndef QSA_REGRESSION_HPP_
#define QSA_REGRESSION_HPP_

#include <cstddef>
#include <span>
#include <utility>

namespace qsa {

/// Least-squares line ln y = intercept + alpha ln x; alpha is the empirical
/// exponent of y = Theta(x^alpha).
struct RegressionResult {
  double alpha = 0.0;
  double intercept = 0.0;
  double rse = 0.0;  // residual standard error in log space
  std::size_t points = 0;
};

/// Throws RegressionError with fewer than 3 points or non-positive /
/// non-finite inputs.
RegressionResult fit_log_log(std::span<const double> x, std::span<const double> y);

/// Groups (n, T) samples by n, averages ln T within each group and fits the
/// group means; `points` counts distinct n.
RegressionResult fit_power_law_by_order(std::span<const std::pair<std::size_t, double>> samples);

}  // namespace qsa

#endif
