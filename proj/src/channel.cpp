#include "channel.hpp"

#include <cmath>
#include <stdexcept>

namespace cachesim {

ParetoShape::ParetoShape(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha) || alpha <= 1.0) {
    throw std::domain_error("Pareto shape requires finite alpha > 1");
  }
}

double pareto_pdf(ParetoShape shape, double x) {
  if (x < 1.0) return 0.0;
  return shape.alpha() * std::pow(x, -(shape.alpha() + 1.0));
}

double pareto_cdf(ParetoShape shape, double x) {
  if (x < 1.0) return 0.0;
  return -std::expm1(-shape.alpha() * std::log(x));
}

double pareto_quantile(ParetoShape shape, double u) {
  if (!(u >= 0.0 && u < 1.0)) {
    throw std::domain_error("quantile requires 0 <= u < 1");
  }
  return std::exp(-std::log1p(-u) / shape.alpha());
}

double pareto_mean(ParetoShape shape) {
  return shape.alpha() / (shape.alpha() - 1.0);
}

ChannelMatrix::ChannelMatrix(int n, std::vector<double> gains)
    : n_(n), gains_(std::move(gains)) {
  if (n < 1) {
    throw std::invalid_argument("matrix size must be at least 1");
  }
  if (gains_.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("gain vector must hold n*n entries");
  }
  for (double g : gains_) {
    if (!std::isfinite(g) || g <= 0.0) {
      throw std::invalid_argument("gains must be positive and finite");
    }
  }
}

ChannelMatrix ChannelMatrix::scaled(double factor) const {
  if (!std::isfinite(factor) || factor <= 0.0) {
    throw std::invalid_argument("scale factor must be positive and finite");
  }
  std::vector<double> gains(gains_);
  for (double& g : gains) g *= factor;
  return ChannelMatrix(n_, std::move(gains));
}

ChannelMatrix generate_matrix(int n, ParetoShape shape, RandomStream& stream) {
  if (n < 1) {
    throw std::invalid_argument("matrix size must be at least 1");
  }
  std::vector<double> gains;
  gains.reserve(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n) * n; ++i) {
    gains.push_back(pareto_quantile(shape, stream.next_uniform()));
  }
  return ChannelMatrix(n, std::move(gains));
}

}  // namespace cachesim
