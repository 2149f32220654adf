#include "doctest.h"

#include <cmath>
#include <vector>

#include "corners/rng.hpp"
#include "corners/stats.hpp"

using corners::RngStream;

TEST_CASE("identical seed and stream reproduce the call sequence") {
  RngStream a(123, 7), b(123, 7);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());

  RngStream c(123, 7), d(123, 7);
  for (int i = 0; i < 100; ++i) {
    CHECK(c.normal() == d.normal());
    CHECK(c.uniform01() == d.uniform01());
    CHECK(c.exponential(2.0) == d.exponential(2.0));
  }
}

TEST_CASE("distinct streams and seeds decorrelate") {
  RngStream a(123, 0), b(123, 1), c(124, 0);
  int equal_ab = 0, equal_ac = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto va = a.next_u64();
    if (va == b.next_u64()) ++equal_ab;
    if (va == c.next_u64()) ++equal_ac;
  }
  CHECK(equal_ab == 0);
  CHECK(equal_ac == 0);
}

TEST_CASE("uniform ranges") {
  RngStream rng(5, 0);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double v = rng.uniform_open01();
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("normal and exponential draws match their laws") {
  RngStream rng(99, 3);
  const std::size_t n = 100000;
  std::vector<double> normals(n), exps(n);
  for (auto& x : normals) x = rng.normal();
  for (auto& x : exps) x = rng.exponential(2.0);

  const auto mn = corners::moment_report(normals);
  CHECK(std::abs(mn.mean) < 3.0 * mn.stderr_mean + 1e-12);
  CHECK(std::abs(mn.variance - 1.0) < 3.0 * mn.stderr_variance);

  const auto ks = corners::ks_one_sample(
      normals, [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); },
      "normal draws vs exact cdf");
  CHECK(ks.passed);

  const auto me = corners::moment_report(exps);
  CHECK(std::abs(me.mean - 0.5) < 3.0 * me.stderr_mean);
  const auto kse = corners::ks_one_sample(
      exps, [](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-2.0 * x); },
      "exponential draws vs exact cdf");
  CHECK(kse.passed);
}

TEST_CASE("uniform draws match the identity cdf") {
  RngStream rng(2024, 11);
  std::vector<double> u(100000);
  for (auto& x : u) x = rng.uniform01();
  const auto ks = corners::ks_one_sample(
      u, [](double x) { return std::clamp(x, 0.0, 1.0); }, "uniform vs identity");
  CHECK(ks.passed);
}
