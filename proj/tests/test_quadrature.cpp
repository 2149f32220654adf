#include "doctest.h"

#include <cmath>
#include <numbers>

#include "corners/quadrature.hpp"
#include "oracles.hpp"

using corners::integrate;

TEST_CASE("polynomials and exponentials") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0).value ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(integrate([](double x) { return std::exp(x); }, 0.0, 1.0).value ==
        doctest::Approx(std::expm1(1.0)).epsilon(1e-13));
}

TEST_CASE("gaussian mass over a wide interval") {
  auto phi = [](double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
  };
  const auto r = integrate(phi, -8.0, 8.0, 1e-12);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("oscillatory integrand agrees with the simpson oracle") {
  auto f = [](double x) { return std::sin(7.0 * x) * std::exp(-x * x) + 0.2 * x; };
  const double gk = integrate(f, -2.0, 3.0, 1e-11).value;
  const double simpson = oracles::simpson_refined(f, -2.0, 3.0, 1e-12);
  CHECK(gk == doctest::Approx(simpson).epsilon(1e-9));
}

TEST_CASE("narrow spike needs adaptivity") {
  auto f = [](double x) { return std::exp(-1e4 * x * x); };
  const double exact = std::sqrt(std::numbers::pi / 1e4);
  CHECK(integrate(f, -1.0, 1.0, 1e-12).value == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("unconverged integrals are flagged") {
  auto f = [](double x) { return std::abs(x) < 1e-12 ? 1e12 : 1.0 / std::sqrt(std::abs(x)); };
  const auto r = integrate(f, -1.0, 1.0, 1e-14, 8);
  CHECK_FALSE(r.converged);
}
