#include <doctest.h>

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "qsa/errors.hpp"
#include "qsa/regression.hpp"

using namespace qsa;

TEST_SUITE("regression") {
  TEST_CASE("exact power laws") {
    std::vector<double> x{100, 200, 300, 400, 500, 600, 700, 800};
    std::vector<double> sq, lin;
    for (double n : x) {
      sq.push_back(std::sqrt(n));
      lin.push_back(37.5 * n);
    }
    auto a = fit_log_log(x, sq);
    CHECK(std::abs(a.alpha - 0.5) <= 1e-12);
    CHECK(std::abs(a.intercept) <= 1e-10);
    CHECK(a.rse <= 1e-12);
    CHECK(a.points == 8);
    auto b = fit_log_log(x, lin);
    CHECK(std::abs(b.alpha - 1.0) <= 1e-12);
    CHECK(std::abs(b.intercept - std::log(37.5)) <= 1e-10);
  }

  TEST_CASE("residual standard error of a known fit") {
    // ln y = ln x + (+d, -2d, +d): residuals (d, -2d, d) around the slope-1 line.
    const double d = 0.1;
    std::vector<double> x{1, std::exp(1.0), std::exp(2.0)};
    std::vector<double> y{std::exp(d), std::exp(1.0 - 2 * d), std::exp(2.0 + d)};
    auto r = fit_log_log(x, y);
    CHECK(r.alpha == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.rse == doctest::Approx(std::sqrt(6 * d * d)).epsilon(1e-12));
  }

  TEST_CASE("grouping by order averages logarithms") {
    std::vector<std::pair<std::size_t, double>> s;
    for (std::size_t n : {100u, 200u, 400u, 800u}) {
      const double T = std::pow(double(n), 0.75);
      s.emplace_back(n, T * 2.0);
      s.emplace_back(n, T / 2.0);
      s.emplace_back(n, T);
    }
    auto r = fit_power_law_by_order(s);
    CHECK(std::abs(r.alpha - 0.75) <= 1e-12);
    CHECK(r.points == 4);
  }

  TEST_CASE("rejected inputs") {
    std::vector<double> two{1, 2};
    CHECK_THROWS_AS(fit_log_log(two, two), RegressionError);
    std::vector<double> x{1, 2, 3}, bad{1, 0, 3}, inf{1, std::numeric_limits<double>::infinity(), 2};
    CHECK_THROWS_AS(fit_log_log(x, bad), RegressionError);
    CHECK_THROWS_AS(fit_log_log(x, inf), RegressionError);
    CHECK_THROWS_AS(fit_log_log(x, two), RegressionError);
    std::vector<std::pair<std::size_t, double>> few{{10, 1.0}, {10, 2.0}, {20, 3.0}};
    CHECK_THROWS_AS(fit_power_law_by_order(few), RegressionError);
  }
}
