#pragma once

#include <span>

#include "corners/interlacing_array.hpp"
#include "corners/rng.hpp"

namespace corners {

/// Left exponential jump: y = c + min(E, x - c) with E exponential of rate
/// alpha. Requires x >= c and alpha > 0. The output satisfies c <= y <= x
/// exactly (the atom y = x has probability exp(-alpha*(x-c))) and does not
/// depend on any right endpoint. Maps the law E_alpha(c,d) to E_{-alpha}(c,d).
double elementary_swap_left(double x, double c, double alpha, RngStream& rng);

/// Mirrored right jump: y = d - min(E, d - x), rate beta > 0, x <= d.
/// Maps E_{-beta}(c,d) to E_{beta}(c,d).
double elementary_swap_right(double x, double d, double beta, RngStream& rng);

struct LevelSwapResult {
  InterlacingArray array;
  PerturbationSequence params;  // input sequence with a_k and a_{k+1} exchanged
};

/// The level swap operator: for a_k > a_{k+1}, independent left jumps of rate
/// a_k - a_{k+1} applied to every entry of level k inside its conditional
/// interval; for a_k < a_{k+1}, mirrored right jumps of rate a_{k+1} - a_k;
/// the identity when a_k = a_{k+1} (no draws are consumed). Only level k
/// changes and the output interlaces exactly. Entries are processed in order
/// i = 1..k, one exponential draw per entry.
///
/// In law this turns the corners distribution with parameters a into the one
/// with a_k and a_{k+1} exchanged. Requires 1 <= k <= depth-1 and
/// a.size() == depth.
LevelSwapResult level_swap(const InterlacingArray& arr, std::size_t k,
                           const PerturbationSequence& a, RngStream& rng);

struct SweepResult {
  InterlacingArray array;
  /// Level whose distribution the truncated sweep does not reproduce: the
  /// deepest level would need the swap at depth (and hence level depth+1) to
  /// match the shifted law. Always equal to depth().
  std::size_t tainted_level;
};

/// Sweep of level swaps k = 1..depth-1 with the running parameter sequence
/// started from the arithmetic progression (0, -alpha, ..., -(depth-1)*alpha),
/// so the swap at level k has rate k*alpha. For input arrays distributed as
/// the corners process of that progression, output levels 1..depth-1 are
/// distributed as the input law shifted by -alpha*t. Requires depth >= 2 and
/// alpha > 0.
SweepResult global_shift_sweep(const InterlacingArray& arr, double alpha,
                               RngStream& rng);

/// Sequential level swaps at the scheduled indices with parameter tracking;
/// the empty schedule is the identity. Each index is validated at its turn.
LevelSwapResult compose_swaps(const InterlacingArray& arr,
                              std::span<const std::size_t> schedule,
                              const PerturbationSequence& a, RngStream& rng);

}  // namespace corners
