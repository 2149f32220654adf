#pragma once

#include <cstddef>

#include "corners/hermitian_matrix.hpp"
#include "corners/interlacing_array.hpp"
#include "corners/rng.hpp"

namespace corners {

/// Samples H = sqrt(t)*G + t*diag(a_1..a_n) with G from the GUE: diagonal
/// entries sqrt(t)*g + t*a_k with g standard real normal, off-diagonal entries
/// sqrt(t)*(u + iv) with u, v independent normal of variance 1/2 (total complex
/// variance t). Draw order is fixed: rows k ascending; within a row the
/// diagonal draw first, then (re, im) pairs for l = k+1..n-1.
/// Throws std::invalid_argument when t <= 0 or a is shorter than n.
HermitianMatrix sample_perturbed_gue_matrix(std::size_t n, double t,
                                            const PerturbationSequence& a,
                                            RngStream& rng);

/// Level m of the result holds the eigenvalues of the top-left m x m corner of
/// H, descending. Cauchy interlacing makes the output a valid interlacing
/// array up to eigensolver accuracy (~1e-14 relative, far below the 1e-8
/// validation tolerance used for sampled arrays).
InterlacingArray corners_eigenvalues(const HermitianMatrix& h);

/// sample_perturbed_gue_matrix followed by corners_eigenvalues.
InterlacingArray sample_corners_process(std::size_t n, double t,
                                        const PerturbationSequence& a,
                                        RngStream& rng);

}  // namespace corners
