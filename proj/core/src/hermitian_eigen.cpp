#include "corners/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace corners {

std::vector<double> jacobi_symmetric_eigenvalues(std::vector<double>& a,
                                                 std::size_t n) {
  std::vector<double> d(n), b(n), z(n, 0.0);
  for (std::size_t p = 0; p < n; ++p) b[p] = d[p] = a[p * n + p];

  const int max_sweeps = 60;
  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::abs(a[p * n + q]);
    if (off == 0.0) return d;

    // Skip tiny rotations during the first sweeps.
    const double thresh = sweep < 4 ? 0.2 * off / static_cast<double>(n * n) : 0.0;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double& apq = a[p * n + q];
        const double g = 100.0 * std::abs(apq);
        if (sweep > 4 && std::abs(d[p]) + g == std::abs(d[p]) &&
            std::abs(d[q]) + g == std::abs(d[q])) {
          apq = 0.0;
          continue;
        }
        if (std::abs(apq) <= thresh) continue;

        double h = d[q] - d[p];
        double t;
        if (std::abs(h) + g == std::abs(h)) {
          t = apq / h;
        } else {
          const double theta = 0.5 * h / apq;
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        h = t * apq;
        z[p] -= h;
        z[q] += h;
        d[p] -= h;
        d[q] += h;
        apq = 0.0;

        auto rotate = [&](std::size_t i1, std::size_t j1, std::size_t i2,
                          std::size_t j2) {
          const double g1 = a[i1 * n + j1];
          const double h1 = a[i2 * n + j2];
          a[i1 * n + j1] = g1 - s * (h1 + g1 * tau);
          a[i2 * n + j2] = h1 + s * (g1 - h1 * tau);
        };
        for (std::size_t j = 0; j < p; ++j) rotate(j, p, j, q);
        for (std::size_t j = p + 1; j < q; ++j) rotate(p, j, j, q);
        for (std::size_t j = q + 1; j < n; ++j) rotate(p, j, q, j);
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      b[p] += z[p];
      d[p] = b[p];
      z[p] = 0.0;
    }
  }

  std::ostringstream msg;
  msg << "jacobi eigensolver did not converge for n=" << n << " within "
      << max_sweeps << " sweeps";
  throw EigensolverError(msg.str());
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& h) {
  const std::size_t m = h.dim();
  if (m == 0) return {};
  if (m == 1) return {h(0, 0).real()};

  // Embed H = X + iY into [[X, -Y], [Y, X]].
  const std::size_t n = 2 * m;
  std::vector<double> a(n * n);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = 0; l < m; ++l) {
      const std::complex<double> v = h(k, l);
      a[k * n + l] = v.real();
      a[(k + m) * n + (l + m)] = v.real();
      a[k * n + (l + m)] = -v.imag();
      a[(k + m) * n + l] = v.imag();
    }
  }

  std::vector<double> d = jacobi_symmetric_eigenvalues(a, n);
  std::sort(d.begin(), d.end(), std::greater<>());
  std::vector<double> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = 0.5 * (d[2 * i] + d[2 * i + 1]);
  return out;
}

}  // namespace corners
