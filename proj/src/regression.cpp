#include "qsa/regression.hpp"

#include <cmath>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "qsa/errors.hpp"

namespace qsa {

RegressionResult fit_log_log(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw RegressionError("x and y differ in length");
  const auto k = static_cast<Eigen::Index>(x.size());
  if (k < 3) throw RegressionError("regression needs at least 3 points");

  Eigen::MatrixXd design(k, 2);
  Eigen::VectorXd rhs(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0) || !std::isfinite(x[i]) || !std::isfinite(y[i]))
      throw RegressionError("regression inputs must be finite and positive");
    design(i, 0) = 1.0;
    design(i, 1) = std::log(x[i]);
    rhs[i] = std::log(y[i]);
  }
  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(rhs);
  const double ssr = (design * coef - rhs).squaredNorm();

  RegressionResult r;
  r.intercept = coef[0];
  r.alpha = coef[1];
  r.rse = std::sqrt(ssr / static_cast<double>(k - 2));
  r.points = static_cast<std::size_t>(k);
  return r;
}

RegressionResult fit_power_law_by_order(std::span<const std::pair<std::size_t, double>> samples) {
  std::map<std::size_t, std::pair<double, std::size_t>> groups;
  for (auto [n, T] : samples) {
    if (!(T > 0.0) || !std::isfinite(T)) throw RegressionError("runtime samples must be finite and positive");
    auto& g = groups[n];
    g.first += std::log(T);
    ++g.second;
  }
  std::vector<double> xs, ys;
  for (const auto& [n, g] : groups) {
    xs.push_back(static_cast<double>(n));
    ys.push_back(std::exp(g.first / static_cast<double>(g.second)));
  }
  return fit_log_log(xs, ys);
}

}  // namespace qsa
