#include "corners/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace corners {

std::string to_json(const TestResult& result) {
  nlohmann::ordered_json j;
  j["name"] = result.name;
  j["statistic"] = result.statistic;
  j["p_value"] = result.p_value;
  j["n1"] = result.n1;
  j["n2"] = result.n2;
  j["threshold"] = result.threshold;
  j["passed"] = result.passed;
  return j.dump();
}

double kolmogorov_sf(double x) {
  if (x <= 0.0) return 1.0;
  if (x < 1.18) {
    // Theta-series form of the CDF, accurate where the direct series is slow.
    const double v = std::numbers::pi * std::numbers::pi / (8.0 * x * x);
    const double t = std::exp(-v);
    const double cdf = std::sqrt(2.0 * std::numbers::pi) / x *
                       (t + std::pow(t, 9.0) + std::pow(t, 25.0) + std::pow(t, 49.0));
    return 1.0 - cdf;
  }
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * x * x);
    sum += sign * term;
    if (term < 1e-16) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

TestResult ks_two_sample(std::span<const double> s1, std::span<const double> s2,
                         std::string name, double threshold) {
  if (s1.empty() || s2.empty())
    throw std::invalid_argument("ks test requires nonempty samples");
  std::vector<double> a(s1.begin(), s1.end());
  std::vector<double> b(s2.begin(), s2.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());

  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }

  TestResult result;
  result.name = std::move(name);
  result.statistic = d;
  result.n1 = a.size();
  result.n2 = b.size();
  result.p_value = kolmogorov_sf(d * std::sqrt(na * nb / (na + nb)));
  result.threshold = threshold;
  result.passed = result.p_value > threshold;
  return result;
}

TestResult ks_one_sample(std::span<const double> s,
                         const std::function<double(double)>& cdf,
                         std::string name, double threshold) {
  if (s.empty()) throw std::invalid_argument("ks test requires nonempty samples");
  std::vector<double> a(s.begin(), s.end());
  std::sort(a.begin(), a.end());
  const double n = static_cast<double>(a.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double f = cdf(a[i]);
    d = std::max(d, (static_cast<double>(i) + 1.0) / n - f);
    d = std::max(d, f - static_cast<double>(i) / n);
  }

  TestResult result;
  result.name = std::move(name);
  result.statistic = d;
  result.n1 = a.size();
  result.p_value = kolmogorov_sf(d * std::sqrt(n));
  result.threshold = threshold;
  result.passed = result.p_value > threshold;
  return result;
}

MomentReport moment_report(std::span<const double> s) {
  if (s.empty()) throw std::invalid_argument("moment report requires samples");
  const double n = static_cast<double>(s.size());

  // Neumaier-compensated sums.
  auto comp_sum = [](std::span<const double> v, auto&& term) {
    double sum = 0.0, comp = 0.0;
    for (double x : v) {
      const double t = term(x);
      const double next = sum + t;
      if (std::abs(sum) >= std::abs(t))
        comp += (sum - next) + t;
      else
        comp += (t - next) + sum;
      sum = next;
    }
    return sum + comp;
  };

  MomentReport r;
  r.n = s.size();
  r.mean = comp_sum(s, [](double x) { return x; }) / n;
  const double mean = r.mean;
  const double ss2 = comp_sum(s, [mean](double x) { return (x - mean) * (x - mean); });
  r.variance = s.size() > 1 ? ss2 / (n - 1.0) : 0.0;
  r.stderr_mean = std::sqrt(r.variance / n);
  const double m4 =
      comp_sum(s, [mean](double x) {
        const double c = (x - mean) * (x - mean);
        return c * c;
      }) /
      n;
  r.stderr_variance = std::sqrt(std::max(0.0, m4 - r.variance * r.variance) / n);
  return r;
}

double histogram_l1(std::span<const double> s,
                    const std::function<double(double)>& density, double lo,
                    double hi, std::size_t bins) {
  if (s.empty() || bins == 0 || !(lo < hi))
    throw std::invalid_argument("histogram_l1: bad arguments");
  const double width = (hi - lo) / static_cast<double>(bins);
  std::vector<double> counts(bins, 0.0);
  double outside = 0.0;
  for (double x : s) {
    if (x < lo || x >= hi) {
      outside += 1.0;
      continue;
    }
    auto b = static_cast<std::size_t>((x - lo) / width);
    if (b >= bins) b = bins - 1;
    counts[b] += 1.0;
  }
  const double n = static_cast<double>(s.size());

  // 2-point Gauss per bin.
  const double off = 0.5 / std::numbers::sqrt3;
  double l1 = 0.0;
  double mass_in = 0.0;
  for (std::size_t b = 0; b < bins; ++b) {
    const double center = lo + (static_cast<double>(b) + 0.5) * width;
    const double p = 0.5 * width *
                     (density(center - off * width) + density(center + off * width));
    mass_in += p;
    l1 += std::abs(counts[b] / n - p);
  }
  l1 += std::abs(outside / n - std::max(0.0, 1.0 - mass_in));
  return l1;
}

double histogram_l1_2d(std::span<const std::pair<double, double>> s,
                       const std::function<double(double, double)>& density,
                       double lo, double hi, std::size_t bins_per_dim) {
  if (s.empty() || bins_per_dim == 0 || !(lo < hi))
    throw std::invalid_argument("histogram_l1_2d: bad arguments");
  const std::size_t m = bins_per_dim;
  const double width = (hi - lo) / static_cast<double>(m);
  std::vector<double> counts(m * m, 0.0);
  double outside = 0.0;
  for (const auto& [x, y] : s) {
    if (x < lo || x >= hi || y < lo || y >= hi) {
      outside += 1.0;
      continue;
    }
    auto bx = std::min(static_cast<std::size_t>((x - lo) / width), m - 1);
    auto by = std::min(static_cast<std::size_t>((y - lo) / width), m - 1);
    counts[bx * m + by] += 1.0;
  }
  const double n = static_cast<double>(s.size());

  const double off = 0.5 / std::numbers::sqrt3;
  double l1 = 0.0;
  double mass_in = 0.0;
  for (std::size_t bx = 0; bx < m; ++bx) {
    const double cx = lo + (static_cast<double>(bx) + 0.5) * width;
    for (std::size_t by = 0; by < m; ++by) {
      const double cy = lo + (static_cast<double>(by) + 0.5) * width;
      double p = 0.0;
      for (int sx : {-1, 1})
        for (int sy : {-1, 1})
          p += density(cx + sx * off * width, cy + sy * off * width);
      p *= 0.25 * width * width;
      mass_in += p;
      l1 += std::abs(counts[bx * m + by] / n - p);
    }
  }
  l1 += std::abs(outside / n - std::max(0.0, 1.0 - mass_in));
  return l1;
}

CorrelationReport pearson_correlation(std::span<const double> x,
                                      std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 3)
    throw std::invalid_argument("correlation requires paired samples, n >= 3");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  CorrelationReport r;
  r.n = x.size();
  r.r = sxy / std::sqrt(sxx * syy);
  r.se = (1.0 - r.r * r.r) / std::sqrt(n - 1.0);
  return r;
}

double normal_two_sided_p(double z) {
  return std::erfc(std::abs(z) / std::numbers::sqrt2);
}

}  // namespace corners
