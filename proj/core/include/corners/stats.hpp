#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace corners {

/// Result of one statistical check. The repo-wide convention is one-sided:
/// passed if and only if p_value > threshold.
struct TestResult {
  std::string name;
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;  // zero for one-sample tests
  double threshold = 1e-3;
  bool passed = true;
};

/// JSON object for one TestResult, deterministic key order.
std::string to_json(const TestResult& result);

/// Survival function of the Kolmogorov distribution,
///   Q(x) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 x^2),
/// with the theta-dual series for small x where the alternating form converges
/// slowly.
double kolmogorov_sf(double x);

/// Two-sample Kolmogorov-Smirnov test; D = sup |F1 - F2|, p-value from the
/// asymptotic Kolmogorov law at D*sqrt(n*m/(n+m)). Throws on empty samples.
TestResult ks_two_sample(std::span<const double> s1, std::span<const double> s2,
                         std::string name = "ks2", double threshold = 1e-3);

/// One-sample KS against a monotone CDF; D computed over order statistics.
TestResult ks_one_sample(std::span<const double> s,
                         const std::function<double(double)>& cdf,
                         std::string name = "ks1", double threshold = 1e-3);

struct MomentReport {
  double mean = 0.0;
  double variance = 0.0;       // unbiased
  double stderr_mean = 0.0;    // sqrt(variance / n)
  double stderr_variance = 0.0;  // moment-based sqrt((m4 - var^2)/n)
  std::size_t n = 0;
};

/// Mean and variance with compensated two-pass summation.
MomentReport moment_report(std::span<const double> s);

/// L1 distance between the sample histogram and the bin masses of an exact
/// density over an equispaced grid on [lo, hi], plus the mismatch of the
/// out-of-range mass. Bin masses use 2-point Gauss integration per bin.
/// Disjoint supports give 2, a perfect match decays like 1/sqrt(n).
double histogram_l1(std::span<const double> s,
                    const std::function<double(double)>& density, double lo,
                    double hi, std::size_t bins);

/// Two-dimensional version on the square [lo, hi]^2 with 2x2 Gauss points per
/// cell.
double histogram_l1_2d(std::span<const std::pair<double, double>> s,
                       const std::function<double(double, double)>& density,
                       double lo, double hi, std::size_t bins_per_dim);

struct CorrelationReport {
  double r = 0.0;
  double se = 0.0;  // asymptotic (1 - r^2) / sqrt(n - 1)
  std::size_t n = 0;
};

CorrelationReport pearson_correlation(std::span<const double> x,
                                      std::span<const double> y);

/// Two-sided normal tail probability for |z|; used to express moment checks
/// in the p-value convention (3 sigma corresponds to p ~ 0.0027).
double normal_two_sided_p(double z);

}  // namespace corners
