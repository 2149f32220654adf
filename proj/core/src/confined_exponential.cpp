#include "corners/confined_exponential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace corners {

namespace {
constexpr double small_tilt = 1e-8;
}

ConfinedExponential::ConfinedExponential(double alpha, double c, double d)
    : alpha_(alpha), c_(c), d_(d), beta_(alpha * (d - c)) {
  if (!(c < d))
    throw std::invalid_argument("confined exponential requires c < d");
  if (!std::isfinite(alpha) || !std::isfinite(c) || !std::isfinite(d))
    throw std::invalid_argument("confined exponential requires finite parameters");
}

double ConfinedExponential::cdf(double x) const {
  if (x <= c_) return 0.0;
  if (x >= d_) return 1.0;
  const double y = (x - c_) / (d_ - c_);
  if (std::abs(beta_) < small_tilt) return y + 0.5 * beta_ * y * (y - 1.0);
  return std::expm1(beta_ * y) / std::expm1(beta_);
}

double ConfinedExponential::quantile(double u) const {
  if (!(u >= 0.0 && u <= 1.0))
    throw std::invalid_argument("quantile argument must lie in [0, 1]");
  double y;
  if (std::abs(beta_) < small_tilt) {
    y = u + 0.5 * beta_ * u * (1.0 - u);
  } else {
    y = std::log1p(u * std::expm1(beta_)) / beta_;
  }
  y = std::clamp(y, 0.0, 1.0);
  return std::clamp(c_ + y * (d_ - c_), c_, d_);
}

double ConfinedExponential::pdf(double x) const {
  if (x < c_ || x > d_) return 0.0;
  const double y = (x - c_) / (d_ - c_);
  if (std::abs(beta_) < small_tilt)
    return (1.0 + beta_ * (y - 0.5)) / (d_ - c_);
  return alpha_ * std::exp(beta_ * y) / std::expm1(beta_);
}

}  // namespace corners
