#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corners/stats.hpp"

namespace corners {

/// The named verification experiments. Each turns one distributional identity
/// of the corners process / reflected Brownian system into Monte Carlo checks
/// against exact references.
enum class ExperimentKind {
  elementary_swap,
  swap_theorem,
  double_swap,
  global_shift,
  bm_identity,
  bm_shift,
  density_oracle,
  gibbs_invariance,
  structural,
};

const char* to_string(ExperimentKind kind);
std::optional<ExperimentKind> parse_experiment(std::string_view name);
const std::vector<ExperimentKind>& all_experiments();

/// Fully resolved experiment parameters. default_config() fills the values the
/// acceptance suite runs with; the CLI overrides individual fields from flags.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::elementary_swap;
  std::size_t n_samples = 100000;  // Monte Carlo replicates (paths for bm-*)
  std::size_t depth = 3;           // array depth N, or K for bm-*
  double t = 1.0;
  double alpha = 1.0;              // rate / drift gap, where the experiment uses one
  std::vector<double> a;           // explicit parameter vector; empty = derived
  double dt = 1e-4;                // bm-* Euler step
  std::uint64_t seed = 42;
  unsigned threads = 0;            // 0 = hardware parallelism
};

ExperimentConfig default_config(ExperimentKind kind);

/// Field-level validation; throws std::invalid_argument naming the bad field.
void validate(const ExperimentConfig& cfg);

struct VerificationReport {
  std::string experiment;
  std::string claim;   // the verified identity, in words
  std::string version;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> config;  // resolved, ordered
  std::vector<TestResult> tests;
  bool passed = true;
  /// Measured runtime; reported by the CLI but excluded from the serialized
  /// report so that identical (config, seed) runs produce identical bytes.
  double wall_clock_seconds = 0.0;
  /// Sample series for plot-data, filled only when requested.
  std::map<std::string, std::vector<double>> sample_dump;
};

/// Deterministic JSON (fixed key order, no timing fields).
std::string to_json(const VerificationReport& report);

/// Runs the configured experiment. All sampling is driven by (seed, stream)
/// pairs derived from cfg.seed with one stream per replicate, so results do
/// not depend on the thread count.
VerificationReport run_experiment(const ExperimentConfig& cfg,
                                  bool collect_samples = false);

}  // namespace corners
