#include <benchmark/benchmark.h>

#include "corners/confined_exponential.hpp"
#include "corners/gibbs.hpp"
#include "corners/gue_sampler.hpp"
#include "corners/reflected_bm.hpp"
#include "corners/rng.hpp"
#include "corners/stats.hpp"
#include "corners/swap_operators.hpp"

namespace {

void bm_normal_draws(benchmark::State& state) {
  corners::RngStream rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(rng.normal());
}
BENCHMARK(bm_normal_draws);

void bm_confined_exponential_sample(benchmark::State& state) {
  corners::RngStream rng(1, 0);
  const corners::ConfinedExponential p(1.3, -1.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(p.sample(rng));
}
BENCHMARK(bm_confined_exponential_sample);

void bm_corners_sample(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  corners::RngStream rng(1, 0);
  const auto a = corners::PerturbationSequence::arithmetic(n, 0.4);
  for (auto _ : state)
    benchmark::DoNotOptimize(corners::sample_corners_process(n, 1.0, a, rng));
}
BENCHMARK(bm_corners_sample)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void bm_level_swap(benchmark::State& state) {
  const std::size_t n = 8;
  corners::RngStream rng(1, 0);
  const auto a = corners::PerturbationSequence::arithmetic(n, 0.4);
  const auto arr = corners::sample_corners_process(n, 1.0, a, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(corners::level_swap(arr, 4, a, rng));
}
BENCHMARK(bm_level_swap);

void bm_sweep(benchmark::State& state) {
  const std::size_t n = 8;
  corners::RngStream rng(1, 0);
  const auto a = corners::PerturbationSequence::arithmetic(n, 0.4);
  const auto arr = corners::sample_corners_process(n, 1.0, a, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(corners::global_shift_sweep(arr, 0.4, rng));
}
BENCHMARK(bm_sweep);

void bm_reflected_steps(benchmark::State& state) {
  const corners::RbmConfig cfg{3, 0.5, 1.0, 1e-3};
  corners::RngStream rng(1, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(corners::simulate_reflected_system(cfg, rng));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(cfg.steps()));
}
BENCHMARK(bm_reflected_steps);

void bm_ks_two_sample(benchmark::State& state) {
  corners::RngStream rng(1, 0);
  std::vector<double> a(10000), b(10000);
  for (auto& v : a) v = rng.normal();
  for (auto& v : b) v = rng.normal();
  for (auto _ : state)
    benchmark::DoNotOptimize(corners::ks_two_sample(a, b, "bench"));
}
BENCHMARK(bm_ks_two_sample);

void bm_density_normalizer(benchmark::State& state) {
  const corners::PerturbationSequence a({0.3, -0.3});
  for (auto _ : state)
    benchmark::DoNotOptimize(corners::level_density_normalizer(1.0, a));
}
BENCHMARK(bm_density_normalizer);

}  // namespace

BENCHMARK_MAIN();
