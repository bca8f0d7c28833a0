#include "theory.hpp"

#include <cmath>
#include <stdexcept>

namespace cachesim {

TheoryParams::TheoryParams(double n, double k, ParetoShape shape,
                           double epsilon)
    : n(n), k(k), shape(shape), epsilon(epsilon) {
  if (!std::isfinite(n) || n < 1.0) {
    throw std::invalid_argument("sample count must be at least 1");
  }
  if (!(k >= 0.0 && k <= 1.0)) {
    throw std::domain_error("memory exponent must lie in [0, 1]");
  }
  if (!std::isfinite(epsilon) || epsilon <= 0.0) {
    throw std::domain_error("epsilon must be positive");
  }
}

double activation_scale(const TheoryParams& p) {
  double exponent = (p.k + 1.0) / (p.shape.alpha() + 1.0) - p.epsilon;
  return std::pow(p.n, exponent);
}

double predicted_exponent(double k, ParetoShape shape) {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw std::domain_error("memory exponent must lie in [0, 1]");
  }
  return (k + 1.0) / (shape.alpha() + 1.0);
}

double max_of_m_cdf(double x, double m, ParetoShape shape) {
  if (!std::isfinite(m) || m < 1.0) {
    throw std::domain_error("maximum requires m >= 1");
  }
  if (x < 1.0) return 0.0;
  return std::exp(m * std::log1p(-std::pow(x, -shape.alpha())));
}

double max_of_m_pdf(double x, double m, ParetoShape shape) {
  if (!std::isfinite(m) || m < 1.0) {
    throw std::domain_error("maximum requires m >= 1");
  }
  if (x < 1.0) return 0.0;
  double alpha = shape.alpha();
  double base = -std::expm1(-alpha * std::log(x));  // 1 - x^(-alpha)
  return m * std::pow(base, m - 1.0) * alpha * std::pow(x, -(alpha + 1.0));
}

double max_of_m_quantile(double u, double m, ParetoShape shape) {
  if (!std::isfinite(m) || m < 1.0) {
    throw std::domain_error("maximum requires m >= 1");
  }
  if (!(u >= 0.0 && u < 1.0)) {
    throw std::domain_error("quantile requires 0 <= u < 1");
  }
  if (u == 0.0) return 1.0;
  double base = -std::expm1(std::log(u) / m);  // 1 - u^(1/m)
  return std::pow(base, -1.0 / shape.alpha());
}

FalkNormalizers falk_normalizers(double n, double i, double m,
                                 ParetoShape shape) {
  if (!std::isfinite(n) || !std::isfinite(i) || i < 1.0) {
    throw std::domain_error("order index must satisfy 1 <= i < n");
  }
  double tail = i / n;
  if (!(tail > 0.0 && tail < 1.0)) {
    throw std::domain_error("order index must satisfy 1 <= i < n");
  }
  FalkNormalizers out;
  out.a_n = max_of_m_quantile(1.0 - tail, m, shape);
  out.b_n = std::sqrt(i) / (n * max_of_m_pdf(out.a_n, m, shape));
  return out;
}

double a_n_asymptotic(const TheoryParams& p) {
  double alpha = p.shape.alpha();
  return std::pow(p.n, (p.k + 1.0) / (alpha + 1.0)) *
         std::pow(p.n, p.epsilon / alpha);
}

double theorem_lower_bound(const TheoryParams& p) {
  return activation_scale(p) / 4.0;
}

}  // namespace cachesim
