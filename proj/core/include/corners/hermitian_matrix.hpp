#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace corners {

/// Dense complex Hermitian matrix. set() keeps the Hermitian invariant by
/// writing the conjugate mirror entry; diagonal entries are stored with a zero
/// imaginary part. Matrix indices are 0-based.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t dim() const { return n_; }

  std::complex<double> operator()(std::size_t k, std::size_t l) const {
    return entries_[k * n_ + l];
  }

  void set(std::size_t k, std::size_t l, std::complex<double> value) {
    if (k == l) {
      entries_[k * n_ + k] = {value.real(), 0.0};
    } else {
      entries_[k * n_ + l] = value;
      entries_[l * n_ + k] = std::conj(value);
    }
  }

  /// Top-left m x m principal corner.
  HermitianMatrix corner(std::size_t m) const {
    HermitianMatrix c(m);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = 0; l < m; ++l) c.entries_[k * m + l] = entries_[k * n_ + l];
    return c;
  }

  double trace() const {
    double s = 0.0;
    for (std::size_t k = 0; k < n_; ++k) s += entries_[k * n_ + k].real();
    return s;
  }

 private:
  std::size_t n_;
  std::vector<std::complex<double>> entries_;
};

}  // namespace corners
