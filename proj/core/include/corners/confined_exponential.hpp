#pragma once

#include "corners/rng.hpp"

namespace corners {

/// Distribution on (c, d) with density proportional to exp(alpha*x); alpha = 0
/// is the uniform distribution. Defined for either sign of alpha since the
/// interval is bounded.
///
/// CDF and quantile use expm1/log1p forms; for |alpha*(d-c)| below 1e-8 they
/// switch to the uniform law with a first-order tilt so that alpha -> 0 is the
/// continuous limit.
class ConfinedExponential {
 public:
  ConfinedExponential(double alpha, double c, double d);

  double rate() const { return alpha_; }
  double lower() const { return c_; }
  double upper() const { return d_; }

  double cdf(double x) const;

  /// Inverse CDF; u in [0, 1], result in [c, d]. Throws on u outside [0, 1].
  double quantile(double u) const;

  double pdf(double x) const;

  /// Inverse-CDF sampling from one uniform draw.
  double sample(RngStream& rng) const { return quantile(rng.uniform01()); }

 private:
  double alpha_, c_, d_;
  double beta_;  // alpha * (d - c)
};

}  // namespace corners
