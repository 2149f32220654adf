// corners-lab: sampling, Markov swap operators and reflected Brownian motions
// for the perturbed GUE corners process, with statistical verification of
// their distributional identities.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "corners/csv.hpp"
#include "corners/experiments.hpp"
#include "corners/gue_sampler.hpp"
#include "corners/interlacing_array.hpp"
#include "corners/plot_data.hpp"
#include "corners/reflected_bm.hpp"
#include "corners/rng.hpp"
#include "corners/swap_operators.hpp"
#include "corners/version.hpp"

namespace {

struct CommonOpts {
  std::size_t n = 1;
  std::size_t depth = 3;
  double t = 1.0;
  double alpha = 0.5;
  std::string a_list;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  std::string out;
};

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    double v = 0.0;
    const char* begin = field.data();
    const auto res = std::from_chars(begin, begin + field.size(), v);
    if (res.ec != std::errc{} || res.ptr != begin + field.size())
      throw CLI::ValidationError("--a", "bad numeric entry '" + field + "'");
    values.push_back(v);
  }
  return values;
}

corners::PerturbationSequence resolve_params(const CommonOpts& opts) {
  if (!opts.a_list.empty()) {
    auto values = parse_list(opts.a_list);
    if (values.size() < opts.depth)
      throw CLI::ValidationError("--a", "needs at least --depth entries");
    values.resize(opts.depth);
    return corners::PerturbationSequence(values);
  }
  return corners::PerturbationSequence::arithmetic(opts.depth, opts.alpha);
}

class OutputStream {
 public:
  explicit OutputStream(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw CLI::ValidationError("--out", "cannot open '" + path + "'");
    }
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void add_common_flags(CLI::App* cmd, CommonOpts& opts, bool with_alpha = true) {
  cmd->add_option("--n", opts.n, "Number of samples");
  cmd->add_option("--depth", opts.depth, "Array depth N");
  cmd->add_option("--t", opts.t, "Time parameter t > 0");
  if (with_alpha)
    cmd->add_option("--alpha", opts.alpha,
                    "Drift gap; parameters default to (0, -alpha, -2 alpha, ...)");
  cmd->add_option("--a", opts.a_list,
                  "Explicit comma-separated parameter list (overrides --alpha)");
  cmd->add_option("--seed", opts.seed, "Random seed")
      ->envname("CORNERS_LAB_SEED");
  cmd->add_option("--threads", opts.threads, "Worker threads (0 = hardware)");
  cmd->add_option("--out", opts.out, "Output file (default: stdout)");
}

void write_samples_header(std::ostream& out, bool with_stage) {
  out << (with_stage ? "sample,stage,level,index,value\n" : "sample,level,index,value\n");
}

void write_array_rows(std::ostream& out, std::size_t sample, const char* stage,
                      const corners::InterlacingArray& arr) {
  for (std::size_t k = 1; k <= arr.depth(); ++k)
    for (std::size_t j = 1; j <= k; ++j) {
      out << sample << ',';
      if (stage) out << stage << ',';
      out << k << ',' << j << ',' << arr(k, j) << '\n';
    }
}

int cmd_sample(const CommonOpts& opts) {
  const auto a = resolve_params(opts);
  OutputStream out(opts.out);
  write_samples_header(out.get(), false);
  for (std::size_t i = 0; i < opts.n; ++i) {
    corners::RngStream rng(opts.seed, i);
    const auto arr = corners::sample_corners_process(opts.depth, opts.t, a, rng);
    write_array_rows(out.get(), i, nullptr, arr);
  }
  return 0;
}

int cmd_swap(const CommonOpts& opts, std::size_t k) {
  const auto a = resolve_params(opts);
  OutputStream out(opts.out);
  write_samples_header(out.get(), true);
  for (std::size_t i = 0; i < opts.n; ++i) {
    corners::RngStream rng(opts.seed, i);
    const auto arr = corners::sample_corners_process(opts.depth, opts.t, a, rng);
    const auto swapped = corners::level_swap(arr, k, a, rng);
    write_array_rows(out.get(), i, "pre", arr);
    write_array_rows(out.get(), i, "post", swapped.array);
  }
  return 0;
}

int cmd_sweep(const CommonOpts& opts) {
  const auto a = corners::PerturbationSequence::arithmetic(opts.depth, opts.alpha);
  OutputStream out(opts.out);
  write_samples_header(out.get(), false);
  for (std::size_t i = 0; i < opts.n; ++i) {
    corners::RngStream rng(opts.seed, i);
    const auto arr = corners::sample_corners_process(opts.depth, opts.t, a, rng);
    const auto swept = corners::global_shift_sweep(arr, opts.alpha, rng);
    write_array_rows(out.get(), i, nullptr, swept.array);
  }
  std::cerr << "note: level " << opts.depth
            << " of each swept array is truncation-tainted (its swap would need "
               "level "
            << opts.depth + 1 << ")\n";
  return 0;
}

int cmd_rbm(const CommonOpts& opts, double dt, bool full, const std::string& traj) {
  corners::RbmConfig cfg{opts.depth, opts.alpha, opts.t, dt};
  cfg.validate();
  if (cfg.dt_was_rounded())
    std::cerr << "warning: t/dt is not an integer; using dt = " << cfg.effective_dt()
              << " (" << cfg.steps() << " steps)\n";

  std::unique_ptr<std::ofstream> traj_file;
  if (!traj.empty()) {
    traj_file = std::make_unique<std::ofstream>(traj);
    if (!*traj_file) throw CLI::ValidationError("--traj", "cannot open '" + traj + "'");
    *traj_file << "step,level,index,value\n";
  }

  OutputStream out(opts.out);
  out.get() << (full ? "path,level,index,value\n" : "path,level,value\n");
  for (std::size_t i = 0; i < opts.n; ++i) {
    corners::RngStream rng(opts.seed, i);
    if (full || (traj_file && i == 0)) {
      corners::InterlacingArray state(0);
      if (traj_file && i == 0) {
        state = corners::simulate_reflected_system(
            cfg, rng, [&](std::size_t step, const corners::InterlacingArray& s) {
              for (std::size_t k = 1; k <= s.depth(); ++k)
                for (std::size_t j = 1; j <= k; ++j)
                  *traj_file << step << ',' << k << ',' << j << ',' << s(k, j) << '\n';
            });
      } else {
        state = corners::simulate_reflected_system(cfg, rng);
      }
      if (full) {
        write_array_rows(out.get(), i, nullptr, state);
      } else {
        const auto x = corners::edge_values(state);
        for (std::size_t k = 1; k <= x.size(); ++k)
          out.get() << i << ',' << k << ',' << x[k - 1] << '\n';
      }
    } else {
      const auto x = corners::simulate_edges(cfg, rng);
      for (std::size_t k = 1; k <= x.size(); ++k)
        out.get() << i << ',' << k << ',' << x[k - 1] << '\n';
    }
  }
  return 0;
}

int cmd_verify(const corners::ExperimentConfig& cfg, const std::string& out_path,
               const std::string& samples_path) {
  const auto report = corners::run_experiment(cfg, !samples_path.empty());

  for (const auto& test : report.tests)
    std::cout << (test.passed ? "  [ok]   " : "  [FAIL] ") << test.name
              << "  stat=" << test.statistic << " p=" << test.p_value << '\n';
  std::cout << report.experiment << ": " << (report.passed ? "PASSED" : "FAILED")
            << " (" << report.tests.size() << " checks, " << report.wall_clock_seconds
            << " s, seed " << report.seed << ")\n";

  const std::string json = corners::to_json(report);
  if (out_path.empty()) {
    std::cout << json;
  } else {
    std::ofstream file(out_path);
    if (!file) throw CLI::ValidationError("--out", "cannot open '" + out_path + "'");
    file << json;
  }
  if (!samples_path.empty()) {
    std::ofstream file(samples_path);
    if (!file)
      throw CLI::ValidationError("--samples", "cannot open '" + samples_path + "'");
    corners::write_series_csv(report.sample_dump, file);
  }
  return report.passed ? 0 : 1;
}

int cmd_plot_data(const std::string& in_path, const std::string& kind,
                  std::string series, const std::string& series2, std::size_t bins,
                  const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) throw CLI::ValidationError("--in", "cannot open '" + in_path + "'");
  const auto all = corners::read_series_csv(in);
  if (all.empty()) throw CLI::ValidationError("--in", "no samples in input");

  auto pick = [&](const std::string& name) -> const std::vector<double>& {
    const auto it = all.find(name);
    if (it == all.end())
      throw CLI::ValidationError("--series", "series '" + name + "' not in input");
    return it->second;
  };
  if (series.empty()) {
    if (all.size() != 1)
      throw CLI::ValidationError("--series",
                                 "input holds several series, pick one explicitly");
    series = all.begin()->first;
  }

  OutputStream out(out_path);
  if (kind == "ecdf") {
    corners::write_ecdf_csv(pick(series), out.get());
  } else if (kind == "histogram") {
    corners::write_histogram_csv(pick(series), bins, out.get());
  } else if (kind == "qq") {
    if (series2.empty())
      throw CLI::ValidationError("--series2", "qq needs a second series");
    corners::write_qq_csv(pick(series), pick(series2), out.get());
  } else {
    throw CLI::ValidationError("--kind", "expected ecdf, histogram or qq");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"perturbed GUE corners process laboratory"};
  app.set_version_flag("--version", corners::version_string);
  app.set_config("--config", "",
                 "INI config file with [subcommand] sections; flags win");
  app.fallthrough();
  app.require_subcommand(1);

  // sample
  CommonOpts sample_opts;
  auto* sample = app.add_subcommand("sample", "Sample corners process arrays");
  add_common_flags(sample, sample_opts);

  // swap
  CommonOpts swap_opts;
  std::size_t swap_k = 1;
  auto* swap = app.add_subcommand("swap", "Apply one level swap to sampled arrays");
  add_common_flags(swap, swap_opts);
  swap->add_option("--k", swap_k, "Level to swap (1 <= k <= depth-1)");

  // sweep
  CommonOpts sweep_opts;
  auto* sweep = app.add_subcommand(
      "sweep", "Apply the full swap sweep (arithmetic-progression parameters)");
  add_common_flags(sweep, sweep_opts);

  // rbm
  CommonOpts rbm_opts;
  rbm_opts.alpha = 0.5;
  double rbm_dt = 1e-3;
  bool rbm_full = false;
  std::string rbm_traj;
  auto* rbm = app.add_subcommand("rbm", "Simulate reflected drifted Brownian motions");
  add_common_flags(rbm, rbm_opts);
  rbm->add_option("--dt", rbm_dt, "Euler step");
  rbm->add_flag("--full", rbm_full, "Output the full triangular array");
  rbm->add_option("--traj", rbm_traj, "Trajectory CSV for path 0 (step,level,index,value)");

  // verify
  std::string verify_name;
  CommonOpts verify_opts;
  double verify_dt = 0.0;
  std::string verify_samples;
  auto* verify = app.add_subcommand("verify", "Run a named verification experiment");
  verify->add_option("experiment", verify_name, "Experiment name")->required();
  auto* verify_n = verify->add_option("--n", verify_opts.n, "Monte Carlo replicates");
  auto* verify_depth = verify->add_option("--depth", verify_opts.depth, "Array depth");
  auto* verify_t = verify->add_option("--t", verify_opts.t, "Time parameter");
  auto* verify_alpha = verify->add_option("--alpha", verify_opts.alpha, "Rate / drift gap");
  auto* verify_a = verify->add_option("--a", verify_opts.a_list, "Comma-separated parameters");
  auto* verify_dt_opt = verify->add_option("--dt", verify_dt, "Euler step (bm-*)");
  verify->add_option("--seed", verify_opts.seed, "Random seed")
      ->envname("CORNERS_LAB_SEED");
  verify->add_option("--threads", verify_opts.threads, "Worker threads (0 = hardware)");
  verify->add_option("--out", verify_opts.out, "Report JSON path (default: stdout)");
  verify->add_option("--samples", verify_samples, "Sample series CSV dump");

  // plot-data
  std::string plot_in, plot_kind = "ecdf", plot_series, plot_series2, plot_out;
  std::size_t plot_bins = 50;
  auto* plot = app.add_subcommand("plot-data", "Emit plot-ready CSV from sample dumps");
  plot->add_option("--in", plot_in, "Sample series CSV (from verify --samples)")
      ->required();
  plot->add_option("--kind", plot_kind, "ecdf, histogram or qq");
  plot->add_option("--series", plot_series, "Series name");
  plot->add_option("--series2", plot_series2, "Second series (qq)");
  plot->add_option("--bins", plot_bins, "Histogram bins");
  plot->add_option("--out", plot_out, "Output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sample->parsed()) return cmd_sample(sample_opts);
    if (swap->parsed()) return cmd_swap(swap_opts, swap_k);
    if (sweep->parsed()) return cmd_sweep(sweep_opts);
    if (rbm->parsed()) return cmd_rbm(rbm_opts, rbm_dt, rbm_full, rbm_traj);
    if (verify->parsed()) {
      const auto kind = corners::parse_experiment(verify_name);
      if (!kind) {
        std::cerr << "error: unknown experiment '" << verify_name << "'; known:";
        for (auto k : corners::all_experiments())
          std::cerr << ' ' << corners::to_string(k);
        std::cerr << '\n';
        return 2;
      }
      corners::ExperimentConfig cfg = corners::default_config(*kind);
      if (verify_n->count()) cfg.n_samples = verify_opts.n;
      if (verify_depth->count()) cfg.depth = verify_opts.depth;
      if (verify_t->count()) cfg.t = verify_opts.t;
      if (verify_alpha->count()) cfg.alpha = verify_opts.alpha;
      if (verify_a->count()) cfg.a = parse_list(verify_opts.a_list);
      if (verify_dt_opt->count()) cfg.dt = verify_dt;
      cfg.seed = verify_opts.seed;
      cfg.threads = verify_opts.threads;
      return cmd_verify(cfg, verify_opts.out, verify_samples);
    }
    if (plot->parsed())
      return cmd_plot_data(plot_in, plot_kind, plot_series, plot_series2, plot_bins,
                           plot_out);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
