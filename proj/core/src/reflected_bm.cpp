#include "corners/reflected_bm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace corners {

void RbmConfig::validate() const {
  if (depth < 1) throw std::invalid_argument("rbm depth must be at least 1");
  if (!(alpha >= 0.0)) throw std::invalid_argument("rbm drift gap must be >= 0");
  if (!(horizon > 0.0)) throw std::invalid_argument("rbm horizon must be positive");
  if (!(dt > 0.0 && dt <= horizon))
    throw std::invalid_argument("rbm step must satisfy 0 < dt <= horizon");
}

std::size_t RbmConfig::steps() const {
  return static_cast<std::size_t>(std::max(1.0, std::round(horizon / dt)));
}

bool RbmConfig::dt_was_rounded() const {
  const double ratio = horizon / dt;
  return std::abs(ratio - std::round(ratio)) > 1e-9 * ratio;
}

namespace {

InterlacingArray run_full(const RbmConfig& cfg, RngStream& rng,
                          const std::function<void(std::size_t, const InterlacingArray&)>* observe) {
  cfg.validate();
  const std::size_t k_max = cfg.depth;
  const std::size_t steps = cfg.steps();
  const double dt = cfg.effective_dt();
  const double sq_dt = std::sqrt(dt);

  InterlacingArray state(k_max);
  for (std::size_t step = 1; step <= steps; ++step) {
    state(1, 1) += sq_dt * rng.normal();  // level 1 drift is zero
    for (std::size_t k = 2; k <= k_max; ++k) {
      const double drift = -static_cast<double>(k - 1) * cfg.alpha * dt;
      for (std::size_t j = 1; j <= k; ++j) {
        double x = state(k, j) + drift + sq_dt * rng.normal();
        if (j < k) x = std::max(x, state(k - 1, j));      // reflect up off B^{k-1}_j
        if (j >= 2) x = std::min(x, state(k - 1, j - 1)); // reflect down off B^{k-1}_{j-1}
        state(k, j) = x;
      }
    }
    if (observe) (*observe)(step, state);
  }
  return state;
}

}  // namespace

InterlacingArray simulate_reflected_system(const RbmConfig& cfg, RngStream& rng) {
  return run_full(cfg, rng, nullptr);
}

InterlacingArray simulate_reflected_system(
    const RbmConfig& cfg, RngStream& rng,
    const std::function<void(std::size_t, const InterlacingArray&)>& observe) {
  return run_full(cfg, rng, &observe);
}

std::vector<double> edge_values(const InterlacingArray& arr) {
  std::vector<double> x(arr.depth());
  for (std::size_t k = 1; k <= arr.depth(); ++k) x[k - 1] = arr(k, k);
  return x;
}

std::vector<double> simulate_edges(const RbmConfig& cfg, RngStream& rng) {
  cfg.validate();
  const std::size_t k_max = cfg.depth;
  const std::size_t steps = cfg.steps();
  const double dt = cfg.effective_dt();
  const double sq_dt = std::sqrt(dt);

  std::vector<double> x(k_max, 0.0);
  for (std::size_t step = 0; step < steps; ++step) {
    x[0] += sq_dt * rng.normal();
    for (std::size_t k = 2; k <= k_max; ++k) {
      const double drift = -static_cast<double>(k - 1) * cfg.alpha * dt;
      const double free = x[k - 1] + drift + sq_dt * rng.normal();
      x[k - 1] = std::min(free, x[k - 2]);
    }
  }
  return x;
}

std::vector<double> exponential_jump_map(std::span<const double> x, double alpha,
                                         RngStream& rng) {
  if (!(alpha > 0.0)) throw std::invalid_argument("jump map rate must be positive");
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (!(x[i] >= x[i + 1]))
      throw std::invalid_argument("jump map input must be descending");
  if (x.empty()) return {};

  std::vector<double> out(x.size() - 1);
  for (std::size_t k = 1; k + 1 <= x.size(); ++k) {
    const double gap = x[k - 1] - x[k];
    const double e = rng.exponential(static_cast<double>(k) * alpha);
    out[k - 1] = e < gap ? std::min(x[k] + e, x[k - 1]) : x[k - 1];
  }
  return out;
}

}  // namespace corners
