#pragma once

#include <span>

#include "corners/confined_exponential.hpp"
#include "corners/interlacing_array.hpp"
#include "corners/rng.hpp"

namespace corners {

/// Product of pairwise differences prod_{i<j} (b_i - b_j).
double vandermonde(std::span<const double> b);

/// Log of the unnormalized single-level eigenvalue density
///   det[exp(-(lambda_i - t a_j)^2 / (2t))] * V(lambda) / V(a),
/// evaluated with per-row exponent factoring for stability. Symmetric in the
/// a_j. Returns -inf where the value degenerates to zero (ties in lambda).
/// Throws std::domain_error on repeated a_j (the confluent limiting form is
/// not implemented).
double log_level_density(std::span<const double> lambda, double t,
                         const PerturbationSequence& a);

/// Normalizing constant of exp(log_level_density) for one or two levels,
/// computed by adaptive quadrature over the box t*a +/- 8*sqrt(t) (descending
/// sector for two levels). Throws std::invalid_argument for more than two
/// parameters.
double level_density_normalizer(double t, const PerturbationSequence& a);

/// Log of the unnormalized joint density of all levels,
///   V(lambda^N) prod_i exp(-t a_i^2/2 - (lambda^N_i)^2/(2t))
///     * exp(|lambda^N| a_N + sum_{k<N} |lambda^k| (a_k - a_{k+1})),
/// on the interlacing support and -inf off it. No distinctness required of a.
double log_joint_density(const InterlacingArray& arr, double t,
                         const PerturbationSequence& a);

/// Log of the exactly normalized conditional density of levels 1..N-1 given
/// level N,
///   V(a) / det[exp(a_i lambda^N_j)]
///     * exp(|lambda^N| a_N + sum_{k<N} |lambda^k| (a_k - a_{k+1})),
/// on the interlacing support and -inf off it. Throws on repeated a_i.
double log_conditional_gibbs(const InterlacingArray& arr,
                             const PerturbationSequence& a);

/// Unnormalized harmonic-function value
///   V(lambda) prod_i exp(-t a_i^2/2 - lambda_i^2/(2t)),
/// symmetric in the a_i.
double harmonic_pert_gue(std::span<const double> lambda, double t,
                         const PerturbationSequence& a);

/// Lower end of the conditional interval for lambda^k_i given its neighbors:
/// max(lambda^{k+1}_{i+1}, lambda^{k-1}_i), with lambda^{k-1}_k = -inf.
double conditional_lower(const InterlacingArray& arr, std::size_t k, std::size_t i);

/// Upper end: min(lambda^{k+1}_i, lambda^{k-1}_{i-1}), with lambda^{k-1}_0 = +inf.
double conditional_upper(const InterlacingArray& arr, std::size_t k, std::size_t i);

/// Replaces level k (1 <= k < depth) by independent confined-exponential draws
/// of rate alpha on the conditional intervals; all other levels are unchanged
/// and the output interlaces. For the corners process alpha = a_k - a_{k+1}
/// makes this a stationarity-preserving kernel. A zero-length interval forces
/// its point. Throws std::invalid_argument on a level index out of range.
InterlacingArray resample_level(const InterlacingArray& arr, std::size_t k,
                                double alpha, RngStream& rng);

}  // namespace corners
