#pragma once

#include <iosfwd>
#include <span>

namespace corners {

/// Empirical CDF rows "value,ecdf": sorted values with F = i/n.
void write_ecdf_csv(std::span<const double> samples, std::ostream& out);

/// Density histogram rows "bin_center,density" over [min, max] of the data.
void write_histogram_csv(std::span<const double> samples, std::size_t bins,
                         std::ostream& out);

/// Quantile-quantile rows "quantile_a,quantile_b" at m = min(|a|, |b|) evenly
/// spaced probabilities; identical samples give the identity line.
void write_qq_csv(std::span<const double> a, std::span<const double> b,
                  std::ostream& out);

}  // namespace corners
