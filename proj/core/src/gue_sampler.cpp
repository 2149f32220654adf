#include "corners/gue_sampler.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "corners/hermitian_eigen.hpp"

namespace corners {

HermitianMatrix sample_perturbed_gue_matrix(std::size_t n, double t,
                                            const PerturbationSequence& a,
                                            RngStream& rng) {
  if (!(t > 0.0)) throw std::invalid_argument("time parameter t must be positive");
  if (a.size() < n)
    throw std::invalid_argument("perturbation sequence shorter than matrix size");

  const double sqrt_t = std::sqrt(t);
  const double sqrt_half_t = std::sqrt(0.5 * t);
  HermitianMatrix h(n);
  for (std::size_t k = 0; k < n; ++k) {
    h.set(k, k, sqrt_t * rng.normal() + t * a.at(k + 1));
    for (std::size_t l = k + 1; l < n; ++l) {
      const double re = sqrt_half_t * rng.normal();
      const double im = sqrt_half_t * rng.normal();
      h.set(k, l, {re, im});
    }
  }
  return h;
}

InterlacingArray corners_eigenvalues(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  InterlacingArray arr(n);
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<double> eig;
    try {
      eig = hermitian_eigenvalues(h.corner(m));
    } catch (const EigensolverError& e) {
      std::ostringstream msg;
      msg << "corners level " << m << " of " << n << ": " << e.what()
          << "; corner entries:";
      msg.precision(17);
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          const auto v = h(k, l);
          msg << " (" << v.real() << "," << v.imag() << ")";
        }
      throw EigensolverError(msg.str());
    }
    for (std::size_t j = 1; j <= m; ++j) arr(m, j) = eig[j - 1];
  }
  return arr;
}

InterlacingArray sample_corners_process(std::size_t n, double t,
                                        const PerturbationSequence& a,
                                        RngStream& rng) {
  return corners_eigenvalues(sample_perturbed_gue_matrix(n, t, a, rng));
}

}  // namespace corners
