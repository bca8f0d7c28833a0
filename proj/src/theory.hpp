#ifndef CACHESIM_THEORY_HPP_
#define CACHESIM_THEORY_HPP_

#include "channel.hpp"

namespace cachesim {

// Closed-form scaling quantities. Everything here is real-valued, including
// order index i and cache size m; rounding to integers is the caller's job
// (samplers need integers, the asymptotic formulas do not).
struct TheoryParams {
  TheoryParams(double n, double k, ParetoShape shape, double epsilon);
  double n;
  double k;
  ParetoShape shape;
  double epsilon;
};

// t = n^((k+1)/(alpha+1) - epsilon), the activation-count scale.
double activation_scale(const TheoryParams& p);

// (k+1)/(alpha+1), the predicted log-log throughput slope.
double predicted_exponent(double k, ParetoShape shape);

// Law of the maximum of m i.i.d. Pareto gains.
double max_of_m_cdf(double x, double m, ParetoShape shape);
double max_of_m_pdf(double x, double m, ParetoShape shape);
double max_of_m_quantile(double u, double m, ParetoShape shape);

struct FalkNormalizers {
  double a_n;
  double b_n;
};

// Centering/spread pair for the i-th-from-top order statistic of n samples
// of the max-of-m Pareto law: a_n is the 1 - i/n quantile and
// b_n = sqrt(i) / (n * pdf(a_n)). m = 1 gives the plain Pareto case.
FalkNormalizers falk_normalizers(double n, double i, double m,
                                 ParetoShape shape);

// n^((k+1)/(alpha+1)) * n^(epsilon/alpha), the closed-form approximation of
// falk a_n at i = activation_scale, m = n^k.
double a_n_asymptotic(const TheoryParams& p);

// activation_scale / 4, the asymptotic floor on expected throughput.
double theorem_lower_bound(const TheoryParams& p);

}  // namespace cachesim

#endif  // CACHESIM_THEORY_HPP_
