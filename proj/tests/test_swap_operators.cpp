#include "doctest.h"

#include <stdexcept>

#include <cmath>
#include <vector>

#include "corners/confined_exponential.hpp"
#include "corners/gue_sampler.hpp"
#include "corners/rng.hpp"
#include "corners/stats.hpp"
#include "corners/swap_operators.hpp"
#include "oracles.hpp"

using namespace corners;

TEST_CASE("left jump keeps the bracket and the atom at x") {
  RngStream rng(71, 0);
  for (int rep = 0; rep < 10000; ++rep) {
    const double y = elementary_swap_left(0.7, 0.0, 1.0, rng);
    CHECK(y >= 0.0);
    CHECK(y <= 0.7);
  }
  // The atom at y = x has probability exp(-alpha (x - c)).
  int at_x = 0;
  const int n = 200000;
  for (int rep = 0; rep < n; ++rep)
    if (elementary_swap_left(0.7, 0.0, 1.0, rng) == 0.7) ++at_x;
  const double expected = std::exp(-0.7);
  const double se = std::sqrt(expected * (1.0 - expected) / n);
  CHECK(std::abs(static_cast<double>(at_x) / n - expected) < 3.0 * se);

  CHECK_THROWS_AS(elementary_swap_left(0.7, 0.0, 0.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(elementary_swap_left(-0.1, 0.0, 1.0, rng), std::invalid_argument);
}

TEST_CASE("left jump turns E_alpha into E_{-alpha}") {
  RngStream rng(72, 0);
  const std::size_t n = 100000;
  const ConfinedExponential input(1.0, 0.0, 1.0);
  const ConfinedExponential target(-1.0, 0.0, 1.0);
  std::vector<double> out(n);
  for (auto& y : out) y = elementary_swap_left(input.sample(rng), 0.0, 1.0, rng);
  CHECK(ks_one_sample(out, [&](double x) { return target.cdf(x); }, "left jump law")
            .passed);
  const auto m = moment_report(out);
  CHECK(std::abs(m.mean - 0.41802329313067346) < 3.0 * m.stderr_mean);
}

TEST_CASE("right jump mirrors the left jump") {
  RngStream rng(73, 0);
  const std::size_t n = 100000;
  const ConfinedExponential input(-1.0, 0.0, 1.0);
  const ConfinedExponential target(1.0, 0.0, 1.0);
  std::vector<double> out(n);
  for (auto& y : out) {
    const double x = input.sample(rng);
    y = elementary_swap_right(x, 1.0, 1.0, rng);
    CHECK(y >= x);
    CHECK(y <= 1.0);
  }
  CHECK(ks_one_sample(out, [&](double x) { return target.cdf(x); }, "right jump law")
            .passed);
  CHECK_THROWS_AS(elementary_swap_right(0.3, 1.0, -1.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(elementary_swap_right(1.3, 1.0, 1.0, rng), std::invalid_argument);
}

TEST_CASE("level swap with equal adjacent parameters is the identity") {
  const auto arr = InterlacingArray::from_levels({{0.2}, {0.8, -0.5}});
  RngStream rng(74, 0);
  const auto out = level_swap(arr, 1, PerturbationSequence({0.3, 0.3}), rng);
  CHECK(out.array == arr);
  CHECK(out.params.values() == std::vector<double>{0.3, 0.3});
}

TEST_CASE("level swap respects the lower-neighbor convention at the bottom edge") {
  // k = 1 in a depth-2 array: the only constraint is lambda^2_2, since the
  // nonexistent level 0 contributes -inf.
  const auto arr = InterlacingArray::from_levels({{0.5}, {1.0, -1.0}});
  RngStream probe(75, 0);
  const double e = probe.exponential(1.0);  // the draw level_swap will consume
  RngStream rng(75, 0);
  const auto out = level_swap(arr, 1, PerturbationSequence({1.0, 0.0}), rng);
  const double expected = e < 1.5 ? -1.0 + e : 0.5;
  CHECK(out.array(1, 1) == doctest::Approx(expected));
  CHECK(out.params.values() == std::vector<double>{0.0, 1.0});
}

TEST_CASE("swap direction follows the parameter order") {
  const auto arr = InterlacingArray::from_levels({{0.2}, {0.8, -0.5}});
  RngStream rng(76, 0);
  for (int rep = 0; rep < 500; ++rep) {
    const auto left = level_swap(arr, 1, PerturbationSequence({1.0, 0.0}), rng);
    CHECK(left.array(1, 1) <= arr(1, 1));
    const auto right = level_swap(arr, 1, PerturbationSequence({0.0, 1.0}), rng);
    CHECK(right.array(1, 1) >= arr(1, 1));
  }
  CHECK_THROWS_AS(level_swap(arr, 2, PerturbationSequence({1.0, 0.0}), rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(level_swap(arr, 1, PerturbationSequence({1.0}), rng),
                  std::invalid_argument);
}

TEST_CASE("level swap only touches its level and keeps interlacing exactly") {
  RngStream rng(77, 0);
  const PerturbationSequence a({0.9, -0.3, 0.4, -0.8});
  for (int rep = 0; rep < 300; ++rep) {
    const auto arr = sample_corners_process(4, 1.0, a, rng);
    const std::size_t k = 1 + rng.next_u64() % 3;
    const auto out = level_swap(arr, k, a, rng);
    CHECK(validate_interlacing(out.array, 0.0).ok());
    for (std::size_t kk = 1; kk <= 4; ++kk) {
      if (kk == k) continue;
      for (std::size_t j = 1; j <= kk; ++j) CHECK(out.array(kk, j) == arr(kk, j));
    }
  }
}

TEST_CASE("compose swaps tracks parameters through the schedule") {
  RngStream rng(78, 0);
  const PerturbationSequence a({0.9, -0.3, 0.4});
  const auto arr = sample_corners_process(3, 1.0, a, rng);

  const std::vector<std::size_t> empty;
  const auto id = compose_swaps(arr, empty, a, rng);
  CHECK(id.array == arr);
  CHECK(id.params == a);

  const std::vector<std::size_t> schedule{1, 2, 1};
  const auto out = compose_swaps(arr, schedule, a, rng);
  CHECK(out.params == a.transposed(1).transposed(2).transposed(1));
  CHECK(validate_interlacing(out.array, 0.0).ok());
}

TEST_CASE("the sweep is the schedule 1..N-1 with arithmetic parameters") {
  const PerturbationSequence a = PerturbationSequence::arithmetic(4, 0.5);
  RngStream rng(79, 0);
  const auto arr = sample_corners_process(4, 1.0, a, rng);

  RngStream r1(80, 0), r2(80, 0);
  const auto swept = global_shift_sweep(arr, 0.5, r1);
  const std::vector<std::size_t> schedule{1, 2, 3};
  const auto composed = compose_swaps(arr, schedule, a, r2);
  CHECK(swept.array == composed.array);  // same draws, same jumps
  CHECK(swept.tainted_level == 4);

  // The deepest level is never touched by the sweep.
  for (std::size_t j = 1; j <= 4; ++j) CHECK(swept.array(4, j) == arr(4, j));

  CHECK_THROWS_AS(global_shift_sweep(InterlacingArray(1), 0.5, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(global_shift_sweep(arr, 0.0, rng), std::invalid_argument);
}

TEST_CASE("sweep at depth 2 sends level one to Normal(-alpha t, t)") {
  const double alpha = 0.6, t = 1.0;
  const PerturbationSequence a = PerturbationSequence::arithmetic(2, alpha);
  const std::size_t n = 20000;
  std::vector<double> level1(n);
  for (std::size_t i = 0; i < n; ++i) {
    RngStream rng(81, i);
    const auto arr = sample_corners_process(2, t, a, rng);
    level1[i] = global_shift_sweep(arr, alpha, rng).array(1, 1);
  }
  const auto ks = ks_one_sample(
      level1,
      [&](double x) {
        return 0.5 * std::erfc(-(x + alpha * t) / std::sqrt(2.0 * t));
      },
      "swept level 1 vs normal");
  CHECK(ks.passed);
}

TEST_CASE("monotonicity: left sweeps never raise entries") {
  RngStream rng(82, 0);
  const PerturbationSequence a = PerturbationSequence::arithmetic(5, 0.7);
  for (int rep = 0; rep < 100; ++rep) {
    const auto arr = sample_corners_process(5, 1.0, a, rng);
    const auto swept = global_shift_sweep(arr, 0.7, rng);
    for (std::size_t k = 1; k <= 5; ++k)
      for (std::size_t j = 1; j <= k; ++j) CHECK(swept.array(k, j) <= arr(k, j));
  }
}
