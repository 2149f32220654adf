#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "corners/interlacing_array.hpp"
#include "corners/rng.hpp"

namespace corners {

/// Configuration for the reflected Brownian system: depth (number of levels),
/// drift gap alpha (level k has drift -(k-1)*alpha), horizon t and Euler step
/// dt. The step count is horizon/dt rounded to the nearest integer; when the
/// ratio is not integral the effective dt is adjusted and dt_was_rounded()
/// reports it so callers can warn.
struct RbmConfig {
  std::size_t depth = 1;
  double alpha = 0.0;
  double horizon = 1.0;
  double dt = 1e-3;

  void validate() const;
  std::size_t steps() const;
  double effective_dt() const { return horizon / static_cast<double>(steps()); }
  bool dt_was_rounded() const;
};

/// Euler scheme for the full triangular system B^k_j started from zero: at
/// each step level 1 moves freely, and each deeper entry takes a free drifted
/// Euler step and is then clamped into [B^{k-1}_j, B^{k-1}_{j-1}] against the
/// already-updated level above (one-sided at j = 1 and j = k). The returned
/// array of values at the horizon interlaces exactly at every step. The scheme
/// converges weakly to the local-time reflection as dt -> 0; levels shallower
/// than depth are unaffected by the truncation. Draw order per step: levels
/// ascending, entries j = 1..k ascending, one normal each.
InterlacingArray simulate_reflected_system(const RbmConfig& cfg, RngStream& rng);

/// Same scheme with an observer invoked after every step (for trajectory
/// dumps); the observer sees the current step index (1-based) and state.
InterlacingArray simulate_reflected_system(
    const RbmConfig& cfg, RngStream& rng,
    const std::function<void(std::size_t, const InterlacingArray&)>& observe);

/// Edge projection X_k = B^k_k.
std::vector<double> edge_values(const InterlacingArray& arr);

/// Fast path simulating only the edge X_1..X_K: the edge entry clamps only
/// against the previous edge entry, so its law matches the full system's edge.
std::vector<double> simulate_edges(const RbmConfig& cfg, RngStream& rng);

/// The exponential jump map: X'_k = X_{k+1} + min(E_{k*alpha}, X_k - X_{k+1})
/// with independent exponential draws of rate k*alpha, for k = 1..K-1 (the
/// last coordinate needs X_{K+1} and is dropped). Requires x descending and
/// alpha > 0; the output satisfies X_{k+1} <= X'_k <= X_k exactly.
std::vector<double> exponential_jump_map(std::span<const double> x, double alpha,
                                         RngStream& rng);

}  // namespace corners
