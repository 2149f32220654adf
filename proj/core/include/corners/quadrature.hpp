#pragma once

#include <cmath>
#include <cstddef>
#include <utility>

namespace corners {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // accumulated |Gauss - Kronrod| over accepted intervals
  bool converged = true;
};

namespace detail {

// 15-point Kronrod / 7-point Gauss pair on [-1, 1] (positive abscissae).
inline constexpr double gk_x[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
// Gauss weights for abscissae 1, 3, 5, 7 of the list above.
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <class F>
std::pair<double, double> gk15(F&& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = f(center);
  double kronrod = gk_wk[7] * f0;
  double gauss = gk_wg[3] * f0;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * gk_x[i];
    const double s = f(center + dx) + f(center - dx);
    kronrod += gk_wk[i] * s;
    if (i % 2 == 1) gauss += gk_wg[i / 2] * s;
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::abs(kronrod - gauss)};
}

template <class F>
void gk_adaptive(F& f, double a, double b, double tol, int depth,
                 QuadratureResult& acc) {
  const auto [value, err] = gk15(f, a, b);
  if (err <= tol || depth <= 0) {
    acc.value += value;
    acc.error += err;
    if (err > tol) acc.converged = false;
    return;
  }
  const double mid = 0.5 * (a + b);
  gk_adaptive(f, a, mid, 0.5 * tol, depth - 1, acc);
  gk_adaptive(f, mid, b, 0.5 * tol, depth - 1, acc);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b] to absolute
/// tolerance abs_tol. The |G-K| difference is a conservative error proxy for
/// the Kronrod value, so the reported error typically overstates the truth.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double abs_tol = 1e-10,
                           int max_depth = 40) {
  QuadratureResult acc;
  detail::gk_adaptive(f, a, b, abs_tol, max_depth, acc);
  return acc;
}

}  // namespace corners
