#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace corners {

/// Triangular array of reals {lambda^k_j}, levels k = 1..N, level k holding k
/// entries in descending order. Level and position indices are 1-based
/// throughout, matching the eigenvalue convention where lambda^k_1 is the
/// largest entry of level k.
///
/// The triangular shape is structural: a depth-N array always has exactly k
/// slots at level k. Value semantics; freely copyable.
class InterlacingArray {
 public:
  InterlacingArray() = default;

  /// Zero-filled array with the given number of levels.
  explicit InterlacingArray(std::size_t depth)
      : depth_(depth), data_(depth * (depth + 1) / 2, 0.0) {}

  /// Builds from explicit levels; throws std::invalid_argument when level k
  /// does not hold exactly k entries (a shape error, not an interlacing
  /// violation).
  static InterlacingArray from_levels(const std::vector<std::vector<double>>& levels);

  std::size_t depth() const { return depth_; }
  std::size_t entry_count() const { return data_.size(); }

  /// lambda^k_j. Both indices 1-based; j in 1..k.
  double operator()(std::size_t k, std::size_t j) const {
    return data_[offset(k) + (j - 1)];
  }
  double& operator()(std::size_t k, std::size_t j) {
    return data_[offset(k) + (j - 1)];
  }

  std::span<const double> level(std::size_t k) const {
    return {data_.data() + offset(k), k};
  }
  std::span<double> level(std::size_t k) {
    return {data_.data() + offset(k), k};
  }

  std::span<const double> flat() const { return data_; }

  friend bool operator==(const InterlacingArray&, const InterlacingArray&) = default;

 private:
  static std::size_t offset(std::size_t k) { return (k - 1) * k / 2; }

  std::size_t depth_ = 0;
  std::vector<double> data_;
};

/// Finite vector of perturbation (drift) parameters a_1..a_N.
/// Entries must be finite; distinctness is not a type invariant, operations
/// that need it check for themselves.
class PerturbationSequence {
 public:
  PerturbationSequence() = default;
  explicit PerturbationSequence(std::vector<double> values);

  /// The arithmetic progression (0, -alpha, ..., -(n-1)*alpha).
  static PerturbationSequence arithmetic(std::size_t n, double alpha);

  std::size_t size() const { return values_.size(); }

  /// a_k, 1-based to match level indexing.
  double at(std::size_t k) const { return values_[k - 1]; }

  const std::vector<double>& values() const { return values_; }

  bool pairwise_distinct() const;

  /// Sequence with a_k and a_{k+1} exchanged.
  PerturbationSequence transposed(std::size_t k) const;

  friend bool operator==(const PerturbationSequence&, const PerturbationSequence&) = default;

 private:
  std::vector<double> values_;
};

enum class ValidationStatus {
  ok,
  shape_error,            // level k without exactly k entries
  order_violation,        // descending order broken within a level
  interlacing_violation,  // inequality between adjacent levels broken
};

struct ValidationReport {
  ValidationStatus status = ValidationStatus::ok;
  std::size_t level = 0;  // k of the first failing constraint
  std::size_t index = 0;  // j of the first failing constraint
  std::string message;

  bool ok() const { return status == ValidationStatus::ok; }
};

/// Checks descending order within levels and the interlacing inequalities
/// lambda^{k+1}_{j+1} <= lambda^k_j <= lambda^{k+1}_j between adjacent levels,
/// each up to additive slack tol. Ties are valid. Violations between levels k
/// and k+1 are reported at (k+1, j) for the upper bound and (k+1, j+1) for the
/// lower bound.
ValidationReport validate_interlacing(const InterlacingArray& arr, double tol);

/// Same checks on raw levels, preceded by a shape check (level k must hold
/// exactly k entries); a shape mismatch is reported as shape_error.
ValidationReport validate_levels(const std::vector<std::vector<double>>& levels, double tol);

/// Every entry increased by s; interlacing is preserved exactly.
InterlacingArray shift_array(const InterlacingArray& arr, double s);

/// Entry k is |lambda^k| = lambda^k_1 + ... + lambda^k_k.
std::vector<double> level_sums(const InterlacingArray& arr);

}  // namespace corners
