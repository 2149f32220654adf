#include "corners/plot_data.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace corners {

namespace {

std::vector<double> sorted(std::span<const double> s) {
  if (s.empty()) throw std::invalid_argument("plot data requires nonempty samples");
  std::vector<double> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

// Empirical quantile with linear interpolation between order statistics.
double quantile_at(const std::vector<double>& v, double p) {
  const double pos = p * (static_cast<double>(v.size()) - 1.0);
  const auto i = static_cast<std::size_t>(pos);
  if (i + 1 >= v.size()) return v.back();
  const double frac = pos - static_cast<double>(i);
  return v[i] + frac * (v[i + 1] - v[i]);
}

}  // namespace

void write_ecdf_csv(std::span<const double> samples, std::ostream& out) {
  const auto v = sorted(samples);
  const double n = static_cast<double>(v.size());
  out << "value,ecdf\n";
  for (std::size_t i = 0; i < v.size(); ++i)
    out << v[i] << ',' << (static_cast<double>(i) + 1.0) / n << '\n';
}

void write_histogram_csv(std::span<const double> samples, std::size_t bins,
                         std::ostream& out) {
  const auto v = sorted(samples);
  if (bins == 0) throw std::invalid_argument("histogram requires bins > 0");
  const double lo = v.front();
  const double hi = v.back();
  const double width = hi > lo ? (hi - lo) / static_cast<double>(bins) : 1.0;
  std::vector<std::size_t> counts(bins, 0);
  for (double x : v) {
    auto b = static_cast<std::size_t>((x - lo) / width);
    if (b >= bins) b = bins - 1;
    ++counts[b];
  }
  const double n = static_cast<double>(v.size());
  out << "bin_center,density\n";
  for (std::size_t b = 0; b < bins; ++b) {
    const double center = lo + (static_cast<double>(b) + 0.5) * width;
    out << center << ',' << static_cast<double>(counts[b]) / (n * width) << '\n';
  }
}

void write_qq_csv(std::span<const double> a, std::span<const double> b,
                  std::ostream& out) {
  const auto va = sorted(a);
  const auto vb = sorted(b);
  const std::size_t m = std::min(va.size(), vb.size());
  out << "quantile_a,quantile_b\n";
  for (std::size_t i = 0; i < m; ++i) {
    const double p = (static_cast<double>(i) + 0.5) / static_cast<double>(m);
    out << quantile_at(va, p) << ',' << quantile_at(vb, p) << '\n';
  }
}

}  // namespace corners
