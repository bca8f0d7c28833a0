#ifndef CACHESIM_CHANNEL_HPP_
#define CACHESIM_CHANNEL_HPP_

#include <span>
#include <vector>

#include "rng.hpp"

namespace cachesim {

// Shape parameter of the unit-minimum Pareto power law
//   f(x) = alpha / x^(alpha+1),   F(x) = 1 - x^(-alpha),   x >= 1.
// Requires alpha > 1 so the mean exists; smaller alpha means a heavier tail.
class ParetoShape {
 public:
  explicit ParetoShape(double alpha);
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

double pareto_pdf(ParetoShape shape, double x);
double pareto_cdf(ParetoShape shape, double x);

// Inverse CDF (1-u)^(-1/alpha); domain error outside 0 <= u < 1.
double pareto_quantile(ParetoShape shape, double u);

// alpha / (alpha - 1).
double pareto_mean(ParetoShape shape);

// Square matrix of link power gains, row = source, column = destination.
// Sampled matrices have every entry in [1, inf); the constructor accepts any
// positive finite gains so rescaled copies stay representable.
class ChannelMatrix {
 public:
  ChannelMatrix(int n, std::vector<double> gains);

  int size() const { return n_; }
  double gain(int source, int dest) const {
    return gains_[static_cast<std::size_t>(source) * n_ + dest];
  }
  std::span<const double> row(int source) const {
    return {gains_.data() + static_cast<std::size_t>(source) * n_,
            static_cast<std::size_t>(n_)};
  }

  // Copy with every gain multiplied by factor (> 0).
  ChannelMatrix scaled(double factor) const;

 private:
  int n_;
  std::vector<double> gains_;  // row-major, n_ * n_
};

// n x n matrix of i.i.d. Pareto gains drawn by inverse-CDF sampling, one
// uniform draw per entry in row-major order.
ChannelMatrix generate_matrix(int n, ParetoShape shape, RandomStream& stream);

}  // namespace cachesim

#endif  // CACHESIM_CHANNEL_HPP_
