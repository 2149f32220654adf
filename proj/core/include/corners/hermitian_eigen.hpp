#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "corners/hermitian_matrix.hpp"

namespace corners {

struct EigensolverError : std::runtime_error {
  explicit EigensolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Eigenvalues of a real symmetric matrix (row-major n x n) by cyclic Jacobi
/// rotations; the input buffer is destroyed. Unsorted. Throws EigensolverError
/// if the off-diagonal mass fails to vanish within the sweep limit.
std::vector<double> jacobi_symmetric_eigenvalues(std::vector<double>& a, std::size_t n);

/// Eigenvalues of a complex Hermitian matrix, descending. Uses the embedding
/// of H = X + iY into the real symmetric [[X, -Y], [Y, X]], whose spectrum is
/// that of H with every eigenvalue doubled; adjacent pairs of the sorted
/// doubled spectrum are averaged.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& h);

}  // namespace corners
