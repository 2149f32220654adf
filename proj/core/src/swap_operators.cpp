#include "corners/swap_operators.hpp"

#include <algorithm>
#include <stdexcept>

#include "corners/gibbs.hpp"

namespace corners {

double elementary_swap_left(double x, double c, double alpha, RngStream& rng) {
  if (!(alpha > 0.0)) throw std::invalid_argument("left jump rate must be positive");
  if (!(x >= c)) throw std::invalid_argument("left jump requires x >= c");
  const double e = rng.exponential(alpha);
  // Branch instead of c + min(e, x-c): keeps y <= x exact in floating point.
  return e < x - c ? std::min(c + e, x) : x;
}

double elementary_swap_right(double x, double d, double beta, RngStream& rng) {
  if (!(beta > 0.0)) throw std::invalid_argument("right jump rate must be positive");
  if (!(x <= d)) throw std::invalid_argument("right jump requires x <= d");
  const double e = rng.exponential(beta);
  return e < d - x ? std::max(d - e, x) : x;
}

LevelSwapResult level_swap(const InterlacingArray& arr, std::size_t k,
                           const PerturbationSequence& a, RngStream& rng) {
  if (a.size() != arr.depth())
    throw std::invalid_argument("parameter sequence length must equal array depth");
  if (k < 1 || k + 1 > arr.depth())
    throw std::invalid_argument("level swap requires 1 <= k <= depth-1");

  LevelSwapResult result{arr, a.transposed(k)};
  const double ak = a.at(k);
  const double ak1 = a.at(k + 1);
  if (ak > ak1) {
    const double rate = ak - ak1;
    for (std::size_t i = 1; i <= k; ++i) {
      const double c = conditional_lower(arr, k, i);
      result.array(k, i) = elementary_swap_left(arr(k, i), c, rate, rng);
    }
  } else if (ak < ak1) {
    const double rate = ak1 - ak;
    for (std::size_t i = 1; i <= k; ++i) {
      const double d = conditional_upper(arr, k, i);
      result.array(k, i) = elementary_swap_right(arr(k, i), d, rate, rng);
    }
  }
  return result;
}

SweepResult global_shift_sweep(const InterlacingArray& arr, double alpha,
                               RngStream& rng) {
  if (arr.depth() < 2)
    throw std::invalid_argument("sweep requires at least two levels");
  if (!(alpha > 0.0)) throw std::invalid_argument("sweep rate must be positive");

  InterlacingArray current = arr;
  PerturbationSequence params = PerturbationSequence::arithmetic(arr.depth(), alpha);
  for (std::size_t k = 1; k + 1 <= arr.depth(); ++k) {
    LevelSwapResult step = level_swap(current, k, params, rng);
    current = std::move(step.array);
    params = std::move(step.params);
  }
  return {std::move(current), arr.depth()};
}

LevelSwapResult compose_swaps(const InterlacingArray& arr,
                              std::span<const std::size_t> schedule,
                              const PerturbationSequence& a, RngStream& rng) {
  LevelSwapResult result{arr, a};
  for (std::size_t k : schedule) {
    LevelSwapResult step = level_swap(result.array, k, result.params, rng);
    result = std::move(step);
  }
  return result;
}

}  // namespace corners
