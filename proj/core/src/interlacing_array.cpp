#include "corners/interlacing_array.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace corners {

InterlacingArray InterlacingArray::from_levels(
    const std::vector<std::vector<double>>& levels) {
  for (std::size_t k = 1; k <= levels.size(); ++k) {
    if (levels[k - 1].size() != k) {
      std::ostringstream msg;
      msg << "shape error: level " << k << " holds " << levels[k - 1].size()
          << " entries, expected " << k;
      throw std::invalid_argument(msg.str());
    }
  }
  InterlacingArray arr(levels.size());
  for (std::size_t k = 1; k <= levels.size(); ++k)
    for (std::size_t j = 1; j <= k; ++j) arr(k, j) = levels[k - 1][j - 1];
  return arr;
}

PerturbationSequence::PerturbationSequence(std::vector<double> values)
    : values_(std::move(values)) {
  for (double v : values_)
    if (!std::isfinite(v))
      throw std::invalid_argument("perturbation parameters must be finite");
}

PerturbationSequence PerturbationSequence::arithmetic(std::size_t n, double alpha) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = -static_cast<double>(i) * alpha;
  return PerturbationSequence(std::move(v));
}

bool PerturbationSequence::pairwise_distinct() const {
  for (std::size_t i = 0; i < values_.size(); ++i)
    for (std::size_t j = i + 1; j < values_.size(); ++j)
      if (values_[i] == values_[j]) return false;
  return true;
}

PerturbationSequence PerturbationSequence::transposed(std::size_t k) const {
  if (k < 1 || k >= values_.size())
    throw std::invalid_argument("transposition index out of range");
  std::vector<double> v = values_;
  std::swap(v[k - 1], v[k]);
  return PerturbationSequence(std::move(v));
}

namespace {

ValidationReport violation(ValidationStatus status, std::size_t k, std::size_t j,
                           std::string message) {
  return ValidationReport{status, k, j, std::move(message)};
}

std::string describe(const char* what, std::size_t k, std::size_t j, double lhs,
                     double rhs) {
  std::ostringstream msg;
  msg << what << " at (k=" << k << ", j=" << j << "): " << lhs << " vs " << rhs;
  return msg.str();
}

}  // namespace

ValidationReport validate_interlacing(const InterlacingArray& arr, double tol) {
  const std::size_t n = arr.depth();
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t j = 1; j + 1 <= k; ++j) {
      if (!(arr(k, j + 1) <= arr(k, j) + tol))
        return violation(ValidationStatus::order_violation, k, j,
                         describe("order violation", k, j, arr(k, j), arr(k, j + 1)));
    }
  }
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    for (std::size_t j = 1; j <= k; ++j) {
      // lambda^k_j <= lambda^{k+1}_j, reported at (k+1, j)
      if (!(arr(k, j) <= arr(k + 1, j) + tol))
        return violation(
            ValidationStatus::interlacing_violation, k + 1, j,
            describe("interlacing violation", k + 1, j, arr(k, j), arr(k + 1, j)));
      // lambda^{k+1}_{j+1} <= lambda^k_j, reported at (k+1, j+1)
      if (!(arr(k + 1, j + 1) <= arr(k, j) + tol))
        return violation(ValidationStatus::interlacing_violation, k + 1, j + 1,
                         describe("interlacing violation", k + 1, j + 1,
                                  arr(k + 1, j + 1), arr(k, j)));
    }
  }
  return {};
}

ValidationReport validate_levels(const std::vector<std::vector<double>>& levels,
                                 double tol) {
  for (std::size_t k = 1; k <= levels.size(); ++k) {
    if (levels[k - 1].size() != k) {
      std::ostringstream msg;
      msg << "shape error: level " << k << " holds " << levels[k - 1].size()
          << " entries, expected " << k;
      return violation(ValidationStatus::shape_error, k, 0, msg.str());
    }
  }
  return validate_interlacing(InterlacingArray::from_levels(levels), tol);
}

InterlacingArray shift_array(const InterlacingArray& arr, double s) {
  InterlacingArray out = arr;
  for (std::size_t k = 1; k <= out.depth(); ++k)
    for (std::size_t j = 1; j <= k; ++j) out(k, j) += s;
  return out;
}

std::vector<double> level_sums(const InterlacingArray& arr) {
  std::vector<double> sums(arr.depth());
  for (std::size_t k = 1; k <= arr.depth(); ++k) {
    double s = 0.0;
    for (double v : arr.level(k)) s += v;
    sums[k - 1] = s;
  }
  return sums;
}

}  // namespace corners
