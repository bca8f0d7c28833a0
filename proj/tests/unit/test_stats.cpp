#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "stats.hpp"

using namespace cachesim;

TEST_CASE("sample moments of a known set") {
  std::vector<double> values{1.0, 2.0, 3.0, 4.0};
  auto m = sample_moments(values);
  CHECK(m.count == 4);
  CHECK(m.mean == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(m.stddev == doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("single sample has zero spread") {
  std::vector<double> values{7.5};
  auto m = sample_moments(values);
  CHECK(m.mean == 7.5);
  CHECK(m.stddev == 0.0);
}

TEST_CASE("least squares recovers an exact line") {
  std::vector<double> x{1.0, 2.0, 3.0, 4.0, 5.0};
  std::vector<double> y;
  for (double v : x) y.push_back(0.5 * v + 3.25);
  auto fit = ols_fit(x, y);
  CHECK(fit.slope == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(3.25).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("least squares is order independent") {
  std::vector<double> x{1.0, 2.0, 3.0, 4.0};
  std::vector<double> y{1.1, 1.9, 3.2, 3.8};
  auto forward = ols_fit(x, y);
  std::vector<double> rx(x.rbegin(), x.rend());
  std::vector<double> ry(y.rbegin(), y.rend());
  auto backward = ols_fit(rx, ry);
  CHECK(forward.slope == doctest::Approx(backward.slope).epsilon(1e-14));
  CHECK(forward.intercept ==
        doctest::Approx(backward.intercept).epsilon(1e-14));
  CHECK(forward.r_squared ==
        doctest::Approx(backward.r_squared).epsilon(1e-14));
}

TEST_CASE("least squares input validation") {
  std::vector<double> x{1.0, 2.0};
  std::vector<double> y{1.0};
  CHECK_THROWS_AS(ols_fit(x, y), std::invalid_argument);
  std::vector<double> one{1.0};
  CHECK_THROWS_AS(ols_fit(one, one), std::invalid_argument);
  std::vector<double> constant{2.0, 2.0, 2.0};
  std::vector<double> any{1.0, 2.0, 3.0};
  CHECK_THROWS_AS(ols_fit(constant, any), std::invalid_argument);
}

TEST_CASE("KS statistic against uniform on a tiny sample") {
  std::vector<double> samples{0.1, 0.5, 0.9};
  auto identity = [](double v) { return v; };
  double d = ks_statistic(samples, identity);
  CHECK(d == doctest::Approx(7.0 / 30.0).epsilon(1e-12));
}

TEST_CASE("KS critical values match the asymptotic form") {
  CHECK(ks_critical_value(2000, 0.01) ==
        doctest::Approx(1.6276236307187293 / std::sqrt(2000.0))
            .epsilon(1e-12));
  CHECK(ks_critical_value(10000, 0.05) ==
        doctest::Approx(1.3581015157406195 / std::sqrt(10000.0))
            .epsilon(1e-12));
  CHECK_THROWS_AS(ks_critical_value(0, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(ks_critical_value(100, 0.0), std::domain_error);
  CHECK_THROWS_AS(ks_critical_value(100, 1.0), std::domain_error);
}

TEST_CASE("normal CDF reference values") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(normal_cdf(1.959963984540054) ==
        doctest::Approx(0.975).epsilon(1e-12));
  CHECK(normal_cdf(-1.959963984540054) ==
        doctest::Approx(0.025).epsilon(1e-9));
}
