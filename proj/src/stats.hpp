#ifndef CACHESIM_STATS_HPP_
#define CACHESIM_STATS_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace cachesim {

struct SampleMoments {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation (n-1 denominator); 0 when n < 2
  std::size_t count = 0;
};

// Two-pass mean/stddev, accumulated in argument order.
SampleMoments sample_moments(std::span<const double> xs);

// One-sample Kolmogorov-Smirnov statistic sup_x |ECDF(x) - F(x)| against a
// continuous CDF. Sorts a copy of the samples.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

// Asymptotic critical value sqrt(-ln(significance/2)/2) / sqrt(n).
// Accurate for n >= 35.
double ks_critical_value(std::size_t n, double significance);

// Standard normal CDF.
double normal_cdf(double z);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;  // 1 when the residuals vanish or y is constant
};

// Ordinary least squares of y on x; needs at least two points.
LinearFit ols_fit(std::span<const double> xs, std::span<const double> ys);

}  // namespace cachesim

#endif  // CACHESIM_STATS_HPP_
