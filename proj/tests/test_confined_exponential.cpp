#include "doctest.h"

#include <stdexcept>

#include <cmath>
#include <vector>

#include "corners/confined_exponential.hpp"
#include "corners/rng.hpp"
#include "corners/stats.hpp"
#include "oracles.hpp"

using namespace corners;

namespace {

// Bisection inverse of the plainly-written CDF, independent of the expm1/log1p
// implementation path.
double bisect_quantile(double alpha, double c, double d, double u) {
  auto cdf = [&](double x) {
    return (std::exp(alpha * (x - c)) - 1.0) / (std::exp(alpha * (d - c)) - 1.0);
  };
  double lo = c, hi = d;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (cdf(mid) < u ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("quantile closed form") {
  SUBCASE("uniform case") {
    const ConfinedExponential u(0.0, 0.0, 2.0);
    CHECK(u.quantile(0.25) == doctest::Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("tilted case, frozen value and bisection oracle") {
    const ConfinedExponential p(1.0, 0.0, 1.0);
    const double q = p.quantile(0.5);
    CHECK(q == doctest::Approx(0.6201145069582775).epsilon(1e-12));
    CHECK(q == doctest::Approx(bisect_quantile(1.0, 0.0, 1.0, 0.5)).epsilon(1e-12));
  }
  SUBCASE("boundaries map to the interval ends") {
    for (double alpha : {-3.0, 0.0, 1e-10, 2.5}) {
      const ConfinedExponential p(alpha, -1.5, 0.25);
      CHECK(p.quantile(0.0) == -1.5);
      CHECK(p.quantile(1.0) == 0.25);
    }
  }
  CHECK_THROWS_AS(ConfinedExponential(1.0, 2.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(ConfinedExponential(1.0, 3.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(ConfinedExponential(0.0, 0.0, 1.0).quantile(1.5),
                  std::invalid_argument);
}

TEST_CASE("cdf-quantile round trip over a wide rate range") {
  for (double beta : {-30.0, -5.0, -1.0, -1e-9, 0.0, 1e-9, 0.5, 7.0, 30.0}) {
    const double c = -0.75, d = 1.75;
    const ConfinedExponential p(beta / (d - c), c, d);
    for (double u = 0.0; u <= 1.0; u += 0.05) {
      CHECK(p.cdf(p.quantile(u)) == doctest::Approx(u).epsilon(1e-12));
    }
  }
}

TEST_CASE("tiny tilt is continuous with the uniform limit") {
  const ConfinedExponential tiny(1e-12, 0.0, 1.0);
  const ConfinedExponential uniform(0.0, 0.0, 1.0);
  for (double u : {0.1, 0.5, 0.9})
    CHECK(tiny.quantile(u) == doctest::Approx(uniform.quantile(u)).epsilon(1e-10));
}

TEST_CASE("sample means match quadrature oracles") {
  const std::size_t n = 100000;
  RngStream rng(55, 0);

  auto sample_mean = [&](double alpha) {
    const ConfinedExponential p(alpha, 0.0, 1.0);
    std::vector<double> draws(n);
    for (auto& x : draws) x = p.sample(rng);
    return moment_report(draws);
  };

  SUBCASE("alpha = 1: mean 1/(e-1)") {
    const auto m = sample_mean(1.0);
    const double weight = oracles::simpson_refined(
        [](double x) { return std::exp(x); }, 0.0, 1.0);
    const double oracle = oracles::simpson_refined(
                              [](double x) { return x * std::exp(x); }, 0.0, 1.0) /
                          weight;
    CHECK(oracle == doctest::Approx(0.5819767068693265).epsilon(1e-9));
    CHECK(std::abs(m.mean - oracle) < 3.0 * m.stderr_mean);
  }
  SUBCASE("alpha = 0: midpoint") {
    const auto m = sample_mean(0.0);
    CHECK(std::abs(m.mean - 0.5) < 3.0 * m.stderr_mean);
  }
  SUBCASE("alpha = -1: reflected mean 1 - 1/(e-1)") {
    const auto m = sample_mean(-1.0);
    const double weight = oracles::simpson_refined(
        [](double x) { return std::exp(-x); }, 0.0, 1.0);
    const double oracle = oracles::simpson_refined(
                              [](double x) { return x * std::exp(-x); }, 0.0, 1.0) /
                          weight;
    CHECK(oracle == doctest::Approx(0.41802329313067346).epsilon(1e-9));
    CHECK(std::abs(m.mean - oracle) < 3.0 * m.stderr_mean);
  }
}

TEST_CASE("sampler agrees with its own cdf") {
  const std::size_t n = 100000;
  RngStream rng(56, 0);
  const ConfinedExponential p(-2.0, -1.0, 3.0);
  std::vector<double> draws(n);
  for (auto& x : draws) {
    x = p.sample(rng);
    CHECK(x >= -1.0);
    CHECK(x <= 3.0);
  }
  const auto ks = ks_one_sample(
      draws, [&](double x) { return p.cdf(x); }, "confined draws vs own cdf");
  CHECK(ks.passed);
}

TEST_CASE("pdf integrates to one") {
  for (double alpha : {-2.0, 0.0, 3.0}) {
    const ConfinedExponential p(alpha, -0.5, 2.0);
    const double mass = oracles::simpson_refined(
        [&](double x) { return p.pdf(x); }, -0.5, 2.0);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  }
}
