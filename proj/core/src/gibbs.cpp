#include "corners/gibbs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "corners/quadrature.hpp"

namespace corners {

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();
constexpr double pos_inf = std::numeric_limits<double>::infinity();

struct SignedLog {
  double log_abs = neg_inf;
  int sign = 0;  // 0 means the value is exactly zero
};

SignedLog signed_log_vandermonde(std::span<const double> b) {
  SignedLog out{0.0, 1};
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      const double diff = b[i] - b[j];
      if (diff == 0.0) return {neg_inf, 0};
      if (diff < 0.0) out.sign = -out.sign;
      out.log_abs += std::log(std::abs(diff));
    }
  }
  return out;
}

// Sign and log of det[exp(m_ij)] given the exponent matrix, via per-row
// factoring and LU with partial pivoting.
SignedLog signed_log_det_exp(const std::vector<double>& m, std::size_t n) {
  double shift = 0.0;
  std::vector<double> b(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    double row_max = m[i * n];
    for (std::size_t j = 1; j < n; ++j) row_max = std::max(row_max, m[i * n + j]);
    shift += row_max;
    for (std::size_t j = 0; j < n; ++j) b[i * n + j] = std::exp(m[i * n + j] - row_max);
  }

  int sign = 1;
  double log_abs = shift;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(b[r * n + col]) > std::abs(b[pivot * n + col])) pivot = r;
    if (b[pivot * n + col] == 0.0) return {neg_inf, 0};
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(b[pivot * n + j], b[col * n + j]);
      sign = -sign;
    }
    const double diag = b[col * n + col];
    if (diag < 0.0) sign = -sign;
    log_abs += std::log(std::abs(diag));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = b[r * n + col] / diag;
      b[r * n + col] = 0.0;
      for (std::size_t j = col + 1; j < n; ++j) b[r * n + j] -= factor * b[col * n + j];
    }
  }
  return {log_abs, sign};
}

void require_distinct(const PerturbationSequence& a) {
  if (!a.pairwise_distinct())
    throw std::domain_error(
        "repeated perturbation parameters: confluent limiting form not "
        "implemented");
}

double gibbs_exponent(const InterlacingArray& arr, const PerturbationSequence& a) {
  const std::size_t n = arr.depth();
  const std::vector<double> sums = level_sums(arr);
  double s = sums[n - 1] * a.at(n);
  for (std::size_t k = 1; k < n; ++k) s += sums[k - 1] * (a.at(k) - a.at(k + 1));
  return s;
}

}  // namespace

double vandermonde(std::span<const double> b) {
  double prod = 1.0;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) prod *= b[i] - b[j];
  return prod;
}

double log_level_density(std::span<const double> lambda, double t,
                         const PerturbationSequence& a) {
  const std::size_t n = lambda.size();
  if (n == 0 || a.size() != n)
    throw std::invalid_argument("lambda and a must have equal positive length");
  if (!(t > 0.0)) throw std::invalid_argument("time parameter t must be positive");
  require_distinct(a);

  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double diff = lambda[i] - t * a.at(j + 1);
      m[i * n + j] = -diff * diff / (2.0 * t);
    }

  const SignedLog det = signed_log_det_exp(m, n);
  const SignedLog vl = signed_log_vandermonde(lambda);
  const SignedLog va = signed_log_vandermonde(a.values());
  if (det.sign == 0 || vl.sign == 0) return neg_inf;
  if (det.sign * vl.sign * va.sign <= 0) return neg_inf;  // rounding degeneracy
  return det.log_abs + vl.log_abs - va.log_abs;
}

double level_density_normalizer(double t, const PerturbationSequence& a) {
  if (a.size() < 1 || a.size() > 2)
    throw std::invalid_argument("quadrature normalizer implemented for one or two levels");
  require_distinct(a);

  const auto [amin, amax] =
      std::minmax_element(a.values().begin(), a.values().end());
  const double lo = t * *amin - 8.0 * std::sqrt(t);
  const double hi = t * *amax + 8.0 * std::sqrt(t);

  if (a.size() == 1) {
    auto f = [&](double x) {
      const double v[1] = {x};
      return std::exp(log_level_density(v, t, a));
    };
    return integrate(f, lo, hi, 1e-12).value;
  }

  auto outer = [&](double l2) {
    auto inner = [&](double l1) {
      const double v[2] = {l1, l2};
      return std::exp(log_level_density(v, t, a));
    };
    return integrate(inner, l2, hi, 1e-12).value;
  };
  return integrate(outer, lo, hi, 1e-10).value;
}

double log_joint_density(const InterlacingArray& arr, double t,
                         const PerturbationSequence& a) {
  const std::size_t n = arr.depth();
  if (n == 0 || a.size() != n)
    throw std::invalid_argument("array depth and parameter count must match");
  if (!(t > 0.0)) throw std::invalid_argument("time parameter t must be positive");
  if (!validate_interlacing(arr, 0.0).ok()) return neg_inf;

  const SignedLog vl = signed_log_vandermonde(arr.level(n));
  if (vl.sign <= 0) return neg_inf;
  double s = vl.log_abs;
  for (std::size_t i = 1; i <= n; ++i) {
    const double ai = a.at(i);
    const double li = arr(n, i);
    s += -t * ai * ai / 2.0 - li * li / (2.0 * t);
  }
  return s + gibbs_exponent(arr, a);
}

double log_conditional_gibbs(const InterlacingArray& arr,
                             const PerturbationSequence& a) {
  const std::size_t n = arr.depth();
  if (n == 0 || a.size() != n)
    throw std::invalid_argument("array depth and parameter count must match");
  require_distinct(a);
  if (!validate_interlacing(arr, 0.0).ok()) return neg_inf;

  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a.at(i + 1) * arr(n, j + 1);

  const SignedLog det = signed_log_det_exp(m, n);
  const SignedLog va = signed_log_vandermonde(a.values());
  if (det.sign == 0 || det.sign * va.sign <= 0) return neg_inf;
  return va.log_abs - det.log_abs + gibbs_exponent(arr, a);
}

double harmonic_pert_gue(std::span<const double> lambda, double t,
                         const PerturbationSequence& a) {
  if (lambda.size() != a.size())
    throw std::invalid_argument("lambda and a must have equal length");
  double log_kernel = 0.0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const double ai = a.at(i + 1);
    log_kernel += -t * ai * ai / 2.0 - lambda[i] * lambda[i] / (2.0 * t);
  }
  return vandermonde(lambda) * std::exp(log_kernel);
}

double conditional_lower(const InterlacingArray& arr, std::size_t k, std::size_t i) {
  const double below = arr(k + 1, i + 1);
  const double above = (k >= 2 && i <= k - 1) ? arr(k - 1, i) : neg_inf;
  return std::max(below, above);
}

double conditional_upper(const InterlacingArray& arr, std::size_t k, std::size_t i) {
  const double below = arr(k + 1, i);
  const double above = (k >= 2 && i >= 2) ? arr(k - 1, i - 1) : pos_inf;
  return std::min(below, above);
}

InterlacingArray resample_level(const InterlacingArray& arr, std::size_t k,
                                double alpha, RngStream& rng) {
  if (k < 1 || k >= arr.depth())
    throw std::invalid_argument("resample level index must satisfy 1 <= k < depth");
  InterlacingArray out = arr;
  for (std::size_t i = 1; i <= k; ++i) {
    const double c = conditional_lower(arr, k, i);
    const double d = conditional_upper(arr, k, i);
    out(k, i) = (c == d) ? c : ConfinedExponential(alpha, c, d).sample(rng);
  }
  return out;
}

}  // namespace corners
