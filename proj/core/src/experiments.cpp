#include "corners/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "corners/confined_exponential.hpp"
#include "corners/gibbs.hpp"
#include "corners/gue_sampler.hpp"
#include "corners/interlacing_array.hpp"
#include "corners/parallel.hpp"
#include "corners/reflected_bm.hpp"
#include "corners/rng.hpp"
#include "corners/swap_operators.hpp"
#include "corners/version.hpp"

namespace corners {

namespace {

// Stream id layout: one block of ids per sample batch, one id per replicate.
constexpr std::uint64_t stream_block = 1ull << 32;

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_vector(const std::vector<double>& v) {
  if (v.empty()) return "auto";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_double(v[i]);
  }
  return out;
}

double normal_cdf(double x, double mean, double variance) {
  return 0.5 * std::erfc(-(x - mean) / std::sqrt(2.0 * variance));
}

// Moment-style check: passes when |observed - expected| <= allowance + 3*se,
// phrased through the p-value convention via the allowance-adjusted z score.
TestResult sigma_check(std::string name, double observed, double expected,
                       double se, double allowance, std::size_t n1,
                       std::size_t n2 = 0) {
  const double excess = std::max(0.0, std::abs(observed - expected) - allowance);
  double z;
  if (se > 0.0)
    z = excess / se;
  else
    z = excess > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  TestResult r;
  r.name = std::move(name);
  r.statistic = z;
  r.p_value = normal_two_sided_p(z);
  r.threshold = normal_two_sided_p(3.0);
  r.n1 = n1;
  r.n2 = n2;
  r.passed = r.p_value > r.threshold;
  return r;
}

// Bound-style check: passes when value < bound; the margin 1 - value/bound
// stands in for the p-value.
TestResult bound_check(std::string name, double value, double bound,
                       std::size_t n1, std::size_t n2 = 0) {
  TestResult r;
  r.name = std::move(name);
  r.statistic = value;
  r.p_value = std::max(0.0, 1.0 - value / bound);
  r.threshold = 0.0;
  r.n1 = n1;
  r.n2 = n2;
  r.passed = r.p_value > r.threshold;
  return r;
}

std::size_t marginal_slot(std::size_t k, std::size_t j) {
  return (k - 1) * k / 2 + (j - 1);
}

std::string level_label(std::size_t k, std::size_t j) {
  return "l" + std::to_string(k) + "_" + std::to_string(j);
}

using ArrayGenerator = std::function<InterlacingArray(RngStream&)>;

// One column per marginal (k, j), one row per replicate; replicate i draws
// from stream stream_base + i so the layout is thread-count independent.
std::vector<std::vector<double>> collect_marginals(
    std::size_t n, std::size_t depth, unsigned threads, std::uint64_t seed,
    std::uint64_t stream_base, const ArrayGenerator& gen) {
  std::vector<std::vector<double>> marginals(depth * (depth + 1) / 2,
                                             std::vector<double>(n));
  parallel_for_index(n, threads, [&](std::size_t i) {
    RngStream rng(seed, stream_base + i);
    const InterlacingArray arr = gen(rng);
    for (std::size_t k = 1; k <= depth; ++k)
      for (std::size_t j = 1; j <= k; ++j) marginals[marginal_slot(k, j)][i] = arr(k, j);
  });
  return marginals;
}

void dump_marginals(VerificationReport& report, const std::string& prefix,
                    std::size_t depth,
                    const std::vector<std::vector<double>>& marginals) {
  for (std::size_t k = 1; k <= depth; ++k)
    for (std::size_t j = 1; j <= k; ++j)
      report.sample_dump[prefix + "." + level_label(k, j)] =
          marginals[marginal_slot(k, j)];
}

// Compare every marginal of two batches with Bonferroni division of the
// repo-wide 0.001 experiment budget across m KS tests.
void ks_marginals(VerificationReport& report, std::size_t depth,
                  const std::vector<std::vector<double>>& lhs,
                  const std::vector<std::vector<double>>& rhs,
                  const std::string& label, double per_test_threshold) {
  for (std::size_t k = 1; k <= depth; ++k)
    for (std::size_t j = 1; j <= k; ++j) {
      const std::size_t slot = marginal_slot(k, j);
      report.tests.push_back(ks_two_sample(lhs[slot], rhs[slot],
                                           label + " " + level_label(k, j),
                                           per_test_threshold));
    }
}

PerturbationSequence resolved_params(const ExperimentConfig& cfg) {
  if (!cfg.a.empty()) return PerturbationSequence(cfg.a);
  return PerturbationSequence::arithmetic(cfg.depth, cfg.alpha);
}

// Mean of the confined exponential E_alpha(c, d) in closed form:
// midpoint + (coth(beta/2)/2 - 1/beta) * (d - c) with beta = alpha*(d-c).
double confined_mean(double alpha, double c, double d) {
  const double beta = alpha * (d - c);
  if (std::abs(beta) < 1e-8) return 0.5 * (c + d);
  const double tilt = 0.5 / std::tanh(0.5 * beta) - 1.0 / beta;
  return 0.5 * (c + d) + tilt * (d - c);
}

// ---------------------------------------------------------------------------
// elementary-swap: left jumps map the confined exponential to its negated rate
// ---------------------------------------------------------------------------
void run_elementary_swap(const ExperimentConfig& cfg, VerificationReport& report,
                         bool collect) {
  const double alpha = cfg.alpha;
  const ConfinedExponential input(alpha, 0.0, 1.0);
  const ConfinedExponential target(-alpha, 0.0, 1.0);

  RngStream rng(cfg.seed, 0);
  std::vector<double> swapped(cfg.n_samples);
  for (double& y : swapped) {
    const double x = input.sample(rng);
    y = elementary_swap_left(x, 0.0, alpha, rng);
  }

  report.tests.push_back(ks_one_sample(
      swapped, [&](double x) { return target.cdf(x); },
      "swapped draws vs E_{-alpha}(0,1) cdf", 1e-3));

  const MomentReport m = moment_report(swapped);
  report.tests.push_back(sigma_check("swapped mean vs exact confined mean",
                                     m.mean, confined_mean(-alpha, 0.0, 1.0),
                                     m.stderr_mean, 0.0, m.n));
  if (collect) report.sample_dump["swapped"] = std::move(swapped);
}

// ---------------------------------------------------------------------------
// swap-theorem: one level swap exchanges adjacent parameters in the corners law
// ---------------------------------------------------------------------------
void run_swap_theorem(const ExperimentConfig& cfg, VerificationReport& report,
                      bool collect) {
  const PerturbationSequence a = resolved_params(cfg);
  const PerturbationSequence a_swapped = a.transposed(1);
  const std::size_t n = cfg.n_samples;
  const std::size_t depth = cfg.depth;
  const double t = cfg.t;
  const double per_test = 1e-3 / (2.0 * static_cast<double>(depth * (depth + 1) / 2));

  auto swapped_gen = [&](const PerturbationSequence& params) {
    return ArrayGenerator([&, params](RngStream& rng) {
      InterlacingArray arr = sample_corners_process(depth, t, params, rng);
      return level_swap(arr, 1, params, rng).array;
    });
  };
  auto direct_gen = [&](const PerturbationSequence& params) {
    return ArrayGenerator([&, params](RngStream& rng) {
      return sample_corners_process(depth, t, params, rng);
    });
  };

  const auto left = collect_marginals(n, depth, cfg.threads, cfg.seed,
                                      0 * stream_block, swapped_gen(a));
  const auto left_ref = collect_marginals(n, depth, cfg.threads, cfg.seed,
                                          1 * stream_block, direct_gen(a_swapped));
  ks_marginals(report, depth, left, left_ref, "left swap vs direct", per_test);

  const auto right = collect_marginals(n, depth, cfg.threads, cfg.seed,
                                       2 * stream_block, swapped_gen(a_swapped));
  const auto right_ref = collect_marginals(n, depth, cfg.threads, cfg.seed,
                                           3 * stream_block, direct_gen(a));
  ks_marginals(report, depth, right, right_ref, "right swap vs direct", per_test);

  if (collect) {
    dump_marginals(report, "left_swapped", depth, left);
    dump_marginals(report, "left_direct", depth, left_ref);
    dump_marginals(report, "right_swapped", depth, right);
    dump_marginals(report, "right_direct", depth, right_ref);
  }
}

// ---------------------------------------------------------------------------
// double-swap: swapping the same level twice preserves the law but moves paths
// ---------------------------------------------------------------------------
void run_double_swap(const ExperimentConfig& cfg, VerificationReport& report,
                     bool collect) {
  const PerturbationSequence a = resolved_params(cfg);
  const std::size_t n = cfg.n_samples;
  const std::size_t depth = cfg.depth;
  const double t = cfg.t;
  const double per_test = 1e-3 / static_cast<double>(depth * (depth + 1) / 2);
  const std::size_t schedule[2] = {1, 1};

  std::vector<unsigned char> changed(n, 0);
  ArrayGenerator doubled = [&](RngStream& rng) {
    InterlacingArray arr = sample_corners_process(depth, t, a, rng);
    const double before = arr(1, 1);
    InterlacingArray out = compose_swaps(arr, schedule, a, rng).array;
    // Replicate index is recoverable from the stream id.
    changed[rng.stream_id() - 0 * stream_block] = out(1, 1) != before;
    return out;
  };
  const auto doubled_marg =
      collect_marginals(n, depth, cfg.threads, cfg.seed, 0 * stream_block, doubled);
  const auto direct_marg = collect_marginals(
      n, depth, cfg.threads, cfg.seed, 1 * stream_block,
      [&](RngStream& rng) { return sample_corners_process(depth, t, a, rng); });

  ks_marginals(report, depth, doubled_marg, direct_marg,
               "double swap vs direct", per_test);

  double unchanged = 0.0;
  for (unsigned char c : changed) unchanged += c ? 0.0 : 1.0;
  report.tests.push_back(bound_check("fraction of unchanged paths (bound 0.01)",
                                     unchanged / static_cast<double>(n), 0.01, n));

  if (collect) {
    dump_marginals(report, "double_swapped", depth, doubled_marg);
    dump_marginals(report, "direct", depth, direct_marg);
  }
}

// ---------------------------------------------------------------------------
// global-shift: the sweep matches the deterministic shift by -alpha*t
// ---------------------------------------------------------------------------
void run_global_shift(const ExperimentConfig& cfg, VerificationReport& report,
                      bool collect) {
  const std::size_t n = cfg.n_samples;
  const std::size_t depth = cfg.depth;
  const double t = cfg.t;
  const double alpha = cfg.alpha;
  const PerturbationSequence a = PerturbationSequence::arithmetic(depth, alpha);
  const std::size_t compared = (depth - 1) * depth / 2;  // levels 1..depth-1
  const double per_test = 1e-3 / static_cast<double>(compared + 1);

  const auto swept = collect_marginals(
      n, depth, cfg.threads, cfg.seed, 0 * stream_block, [&](RngStream& rng) {
        InterlacingArray arr = sample_corners_process(depth, t, a, rng);
        return global_shift_sweep(arr, alpha, rng).array;
      });
  const auto shifted = collect_marginals(
      n, depth, cfg.threads, cfg.seed, 1 * stream_block, [&](RngStream& rng) {
        return shift_array(sample_corners_process(depth, t, a, rng), -alpha * t);
      });

  // Only levels 1..depth-1 of the sweep output carry the shifted law; the
  // deepest level is truncation-tainted and excluded.
  ks_marginals(report, depth - 1, swept, shifted, "sweep vs shifted", per_test);

  const double mean = -alpha * t;
  report.tests.push_back(ks_one_sample(
      swept[marginal_slot(1, 1)],
      [&](double x) { return normal_cdf(x, mean, t); },
      "sweep l1_1 vs Normal(-alpha*t, t)", per_test));

  if (collect) {
    dump_marginals(report, "swept", depth, swept);
    dump_marginals(report, "shifted", depth, shifted);
  }
}

// ---------------------------------------------------------------------------
// bm-identity: reflected edge values match corners eigenvalues at fixed time
// ---------------------------------------------------------------------------
struct EdgeMoments {
  std::vector<MomentReport> by_level;  // index k-1
};

EdgeMoments simulate_edge_moments(const ExperimentConfig& cfg, double dt,
                                  std::uint64_t stream_base,
                                  std::vector<std::vector<double>>* keep = nullptr) {
  const std::size_t n = cfg.n_samples;
  const std::size_t depth = cfg.depth;
  std::vector<std::vector<double>> edges(depth, std::vector<double>(n));
  RbmConfig rbm{depth, cfg.alpha, cfg.t, dt};
  parallel_for_index(n, cfg.threads, [&](std::size_t i) {
    RngStream rng(cfg.seed, stream_base + i);
    const InterlacingArray state = simulate_reflected_system(rbm, rng);
    const std::vector<double> x = edge_values(state);
    for (std::size_t k = 0; k < depth; ++k) edges[k][i] = x[k];
  });
  EdgeMoments out;
  out.by_level.reserve(depth);
  for (std::size_t k = 0; k < depth; ++k) out.by_level.push_back(moment_report(edges[k]));
  if (keep) *keep = std::move(edges);
  return out;
}

void run_bm_identity(const ExperimentConfig& cfg, VerificationReport& report,
                     bool collect) {
  const std::size_t depth = cfg.depth;
  const double t = cfg.t;
  const PerturbationSequence a = resolved_params(cfg);
  const std::size_t n_ref = 100000;

  const auto ref = collect_marginals(
      n_ref, depth, cfg.threads, cfg.seed, 0 * stream_block,
      [&](RngStream& rng) { return sample_corners_process(depth, t, a, rng); });
  std::vector<MomentReport> ref_moments(depth);
  for (std::size_t k = 1; k <= depth; ++k)
    ref_moments[k - 1] = moment_report(ref[marginal_slot(k, k)]);

  std::vector<std::vector<double>> fine_edges;
  const EdgeMoments fine =
      simulate_edge_moments(cfg, cfg.dt, 1 * stream_block, collect ? &fine_edges : nullptr);

  const double allowance = 0.05;
  for (std::size_t k = 1; k <= depth; ++k) {
    const MomentReport& s = fine.by_level[k - 1];
    const MomentReport& r = ref_moments[k - 1];
    report.tests.push_back(sigma_check(
        "mean X_" + std::to_string(k) + " vs corners l" + std::to_string(k) + "_" +
            std::to_string(k),
        s.mean, r.mean, std::hypot(s.stderr_mean, r.stderr_mean), allowance, s.n,
        r.n));
    report.tests.push_back(sigma_check(
        "var X_" + std::to_string(k) + " vs corners l" + std::to_string(k) + "_" +
            std::to_string(k),
        s.variance, r.variance, std::hypot(s.stderr_variance, r.stderr_variance),
        allowance, s.n, r.n));
  }

  // dt-refinement diagnostic: the Euler clamp bias scales like sqrt(dt), so a
  // 4x refinement should roughly halve the worst mean discrepancy over the
  // reflected levels (k >= 2).
  const EdgeMoments coarse = simulate_edge_moments(cfg, 16.0 * cfg.dt, 2 * stream_block);
  const EdgeMoments mid = simulate_edge_moments(cfg, 4.0 * cfg.dt, 3 * stream_block);

  auto discrepancy = [&](const EdgeMoments& m) {
    double d = 0.0;
    for (std::size_t k = 2; k <= depth; ++k)
      d = std::max(d, std::abs(m.by_level[k - 1].mean - ref_moments[k - 1].mean));
    return d;
  };
  auto trend_noise = [&](const EdgeMoments& ma, const EdgeMoments& mb) {
    double se = 0.0;
    for (std::size_t k = 2; k <= depth; ++k) {
      const double s = std::sqrt(
          ma.by_level[k - 1].stderr_mean * ma.by_level[k - 1].stderr_mean +
          mb.by_level[k - 1].stderr_mean * mb.by_level[k - 1].stderr_mean +
          2.0 * ref_moments[k - 1].stderr_mean * ref_moments[k - 1].stderr_mean);
      se = std::max(se, s);
    }
    return se;
  };
  auto trend_check = [&](const char* name, const EdgeMoments& c, const EdgeMoments& f) {
    const double dc = discrepancy(c);
    const double df = discrepancy(f);
    const double excess = std::max(0.0, df - 0.5 * dc - 0.005);
    const double se = trend_noise(c, f);
    const double z = se > 0.0 ? excess / se : 0.0;
    TestResult r;
    r.name = name;
    r.statistic = z;
    r.p_value = normal_two_sided_p(z);
    r.threshold = normal_two_sided_p(3.0);
    r.n1 = cfg.n_samples;
    r.passed = r.p_value > r.threshold;
    report.tests.push_back(r);
  };
  trend_check("mean bias halves under dt/4 (16dt -> 4dt)", coarse, mid);
  trend_check("mean bias halves under dt/4 (4dt -> dt)", mid, fine);

  if (collect) {
    for (std::size_t k = 1; k <= depth; ++k) {
      report.sample_dump["X_" + std::to_string(k)] = fine_edges[k - 1];
      report.sample_dump["corners." + level_label(k, k)] = ref[marginal_slot(k, k)];
    }
  }
}

// ---------------------------------------------------------------------------
// bm-shift: exponential jumps shift the reflected edge law by -alpha*t
// ---------------------------------------------------------------------------
void run_bm_shift(const ExperimentConfig& cfg, VerificationReport& report,
                  bool collect) {
  const std::size_t n = cfg.n_samples;
  const std::size_t depth = cfg.depth;
  const double t = cfg.t;
  const double alpha = cfg.alpha;
  const RbmConfig rbm{depth, alpha, t, cfg.dt};

  std::vector<std::vector<double>> jumped(depth - 1, std::vector<double>(n));
  parallel_for_index(n, cfg.threads, [&](std::size_t i) {
    RngStream rng(cfg.seed, 0 * stream_block + i);
    const std::vector<double> x = simulate_edges(rbm, rng);
    const std::vector<double> xp = exponential_jump_map(x, alpha, rng);
    for (std::size_t k = 0; k + 1 < depth; ++k) jumped[k][i] = xp[k];
  });

  std::vector<std::vector<double>> shifted(depth, std::vector<double>(n));
  parallel_for_index(n, cfg.threads, [&](std::size_t i) {
    RngStream rng(cfg.seed, 1 * stream_block + i);
    const std::vector<double> x = simulate_edges(rbm, rng);
    for (std::size_t k = 0; k < depth; ++k) shifted[k][i] = x[k] - alpha * t;
  });

  const MomentReport m1 = moment_report(jumped[0]);
  report.tests.push_back(sigma_check("mean X'_1 vs -alpha*t", m1.mean, -alpha * t,
                                     std::sqrt(t / static_cast<double>(n)), 0.05,
                                     n));

  const std::size_t ks_count = std::min<std::size_t>(2, depth - 1);
  const double per_test = 1e-3 / static_cast<double>(ks_count);
  for (std::size_t k = 1; k <= ks_count; ++k)
    report.tests.push_back(ks_two_sample(
        jumped[k - 1], shifted[k - 1],
        "X'_" + std::to_string(k) + " vs shifted X_" + std::to_string(k), per_test));

  if (depth >= 3) {
    const CorrelationReport ra = pearson_correlation(jumped[0], jumped[1]);
    const CorrelationReport rb = pearson_correlation(shifted[0], shifted[1]);
    report.tests.push_back(sigma_check("corr(X'_1, X'_2) vs corr(X_1, X_2)", ra.r,
                                       rb.r, std::hypot(ra.se, rb.se), 0.0,
                                       ra.n, rb.n));
  }

  if (collect) {
    for (std::size_t k = 1; k < depth; ++k)
      report.sample_dump["Xp_" + std::to_string(k)] = jumped[k - 1];
    for (std::size_t k = 1; k <= depth; ++k)
      report.sample_dump["shifted_X_" + std::to_string(k)] = shifted[k - 1];
  }
}

// ---------------------------------------------------------------------------
// density-oracle: top-level samples match the quadrature-normalized density
// ---------------------------------------------------------------------------
double density_l1(const ExperimentConfig& cfg, const PerturbationSequence& a,
                  std::size_t n, std::uint64_t stream_base,
                  VerificationReport& report, bool collect,
                  const std::string& tag) {
  const double t = cfg.t;
  const double z = level_density_normalizer(t, a);

  std::vector<std::pair<double, double>> pairs(n);
  parallel_for_index(n, cfg.threads, [&](std::size_t i) {
    RngStream rng(cfg.seed, stream_base + i);
    const InterlacingArray arr = sample_corners_process(2, t, a, rng);
    pairs[i] = {arr(2, 1), arr(2, 2)};
  });

  auto density = [&](double l1, double l2) {
    if (l1 < l2) return 0.0;
    const double v[2] = {l1, l2};
    return std::exp(log_level_density(v, t, a)) / z;
  };
  const double l1_dist = histogram_l1_2d(pairs, density, -5.0, 5.0, 50);

  if (collect) {
    auto& top = report.sample_dump[tag + ".l2_1"];
    auto& bottom = report.sample_dump[tag + ".l2_2"];
    top.resize(n);
    bottom.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      top[i] = pairs[i].first;
      bottom[i] = pairs[i].second;
    }
  }
  return l1_dist;
}

void run_density_oracle(const ExperimentConfig& cfg, VerificationReport& report,
                        bool collect) {
  const PerturbationSequence a = resolved_params(cfg);
  const PerturbationSequence a_swapped = a.transposed(1);
  const std::size_t n = cfg.n_samples;

  const double l1 = density_l1(cfg, a, n, 0 * stream_block, report, collect, "a");
  report.tests.push_back(
      bound_check("histogram L1 vs normalized density (bound 0.05)", l1, 0.05, n));

  const double l1_swapped =
      density_l1(cfg, a_swapped, n, 1 * stream_block, report, collect, "a_swapped");
  report.tests.push_back(
      bound_check("L1 change under parameter swap (bound 0.01)",
                  std::abs(l1 - l1_swapped), 0.01, n));

  // A systematic density mismatch would leave L1 floored at the mismatch mass
  // instead of shrinking like 1/sqrt(n); a quarter-size run separates the two.
  const double l1_quarter =
      density_l1(cfg, a, n / 4, 2 * stream_block, report, false, "quarter");
  report.tests.push_back(bound_check("L1 shrinks with n: full/quarter (bound 0.75)",
                                     l1 / l1_quarter, 0.75, n, n / 4));
}

// ---------------------------------------------------------------------------
// gibbs-invariance: conditional level resampling preserves the corners law
// ---------------------------------------------------------------------------
void run_gibbs_invariance(const ExperimentConfig& cfg, VerificationReport& report,
                          bool collect) {
  const PerturbationSequence a = resolved_params(cfg);
  const std::size_t depth = cfg.depth;
  const double t = cfg.t;
  const std::size_t k = std::min<std::size_t>(2, depth - 1);
  const double rate = a.at(k) - a.at(k + 1);
  const double per_test = 1e-3 / static_cast<double>(depth * (depth + 1) / 2);

  const auto resampled = collect_marginals(
      cfg.n_samples, depth, cfg.threads, cfg.seed, 0 * stream_block,
      [&](RngStream& rng) {
        InterlacingArray arr = sample_corners_process(depth, t, a, rng);
        return resample_level(arr, k, rate, rng);
      });
  const auto direct = collect_marginals(
      cfg.n_samples, depth, cfg.threads, cfg.seed, 1 * stream_block,
      [&](RngStream& rng) { return sample_corners_process(depth, t, a, rng); });

  ks_marginals(report, depth, resampled, direct, "resampled vs direct", per_test);

  if (collect) {
    dump_marginals(report, "resampled", depth, resampled);
    dump_marginals(report, "direct", depth, direct);
  }
}

// ---------------------------------------------------------------------------
// structural: interlacing, monotonicity and locality hold on every application
// ---------------------------------------------------------------------------
InterlacingArray random_interlacing_array(std::size_t depth, double scale,
                                          RngStream& rng) {
  InterlacingArray arr(depth);
  std::vector<double> top(depth);
  for (double& v : top) v = scale * rng.normal();
  std::sort(top.begin(), top.end(), std::greater<>());
  for (std::size_t j = 1; j <= depth; ++j) arr(depth, j) = top[j - 1];
  // Fill upward: given level k+1, each entry of level k is uniform in its gap.
  for (std::size_t k = depth - 1; k >= 1; --k) {
    for (std::size_t i = 1; i <= k; ++i) {
      const double lo = arr(k + 1, i + 1);
      const double hi = arr(k + 1, i);
      arr(k, i) = lo == hi ? lo : lo + rng.uniform01() * (hi - lo);
    }
    if (k == 1) break;
  }
  return arr;
}

PerturbationSequence random_distinct_params(std::size_t n, RngStream& rng) {
  std::vector<double> v(n);
  while (true) {
    for (double& x : v) x = -2.0 + 4.0 * rng.uniform01();
    PerturbationSequence p(v);
    if (p.pairwise_distinct()) return p;
  }
}

void run_structural(const ExperimentConfig& cfg, VerificationReport& report,
                    bool /*collect*/) {
  RngStream rng(cfg.seed, 0);
  std::size_t interlacing_violations = 0;
  std::size_t monotonicity_violations = 0;
  std::size_t locality_violations = 0;
  const double t_choices[3] = {0.25, 1.0, 4.0};

  for (std::size_t iter = 0; iter < cfg.n_samples; ++iter) {
    const std::size_t scenario = iter % 5;
    const std::size_t depth = 2 + rng.next_u64() % 5;  // 2..6
    const double t = t_choices[rng.next_u64() % 3];

    switch (scenario) {
      case 0: {  // eigensolver outputs interlace to 1e-8
        const PerturbationSequence a = random_distinct_params(depth, rng);
        const InterlacingArray arr = sample_corners_process(depth, t, a, rng);
        if (!validate_interlacing(arr, 1e-8).ok()) ++interlacing_violations;
        break;
      }
      case 1: {  // level swap: exact interlacing, monotone jumps, locality
        const InterlacingArray arr = random_interlacing_array(depth, 1.5, rng);
        const PerturbationSequence a = random_distinct_params(depth, rng);
        const std::size_t k = 1 + rng.next_u64() % (depth - 1);
        const LevelSwapResult out = level_swap(arr, k, a, rng);
        if (!validate_interlacing(out.array, 0.0).ok()) ++interlacing_violations;
        const bool left = a.at(k) > a.at(k + 1);
        for (std::size_t i = 1; i <= k; ++i) {
          const double before = arr(k, i);
          const double after = out.array(k, i);
          if (left ? after > before : after < before) ++monotonicity_violations;
        }
        for (std::size_t kk = 1; kk <= depth; ++kk) {
          if (kk == k) continue;
          for (std::size_t j = 1; j <= kk; ++j)
            if (out.array(kk, j) != arr(kk, j)) ++locality_violations;
        }
        break;
      }
      case 2: {  // conditional resampling: exact interlacing and locality
        const InterlacingArray arr = random_interlacing_array(depth, 1.5, rng);
        const std::size_t k = 1 + rng.next_u64() % (depth - 1);
        const double alpha = -3.0 + 6.0 * rng.uniform01();
        const InterlacingArray out = resample_level(arr, k, alpha, rng);
        if (!validate_interlacing(out, 0.0).ok()) ++interlacing_violations;
        for (std::size_t kk = 1; kk <= depth; ++kk) {
          if (kk == k) continue;
          for (std::size_t j = 1; j <= kk; ++j)
            if (out(kk, j) != arr(kk, j)) ++locality_violations;
        }
        break;
      }
      case 3: {  // sweep: exact interlacing, deepest level untouched, monotone
        const InterlacingArray arr = random_interlacing_array(depth, 1.5, rng);
        const double alpha = 0.1 + 1.9 * rng.uniform01();
        const SweepResult out = global_shift_sweep(arr, alpha, rng);
        if (!validate_interlacing(out.array, 0.0).ok()) ++interlacing_violations;
        for (std::size_t j = 1; j <= depth; ++j)
          if (out.array(depth, j) != arr(depth, j)) ++locality_violations;
        for (std::size_t k = 1; k < depth; ++k)
          for (std::size_t j = 1; j <= k; ++j)
            if (out.array(k, j) > arr(k, j)) ++monotonicity_violations;
        break;
      }
      default: {  // jump map bracketing and short reflected runs
        const InterlacingArray arr = random_interlacing_array(depth, 1.5, rng);
        const std::vector<double> x = edge_values(arr);
        const double alpha = 0.1 + 1.9 * rng.uniform01();
        const std::vector<double> xp = exponential_jump_map(x, alpha, rng);
        for (std::size_t k = 0; k + 1 < x.size(); ++k)
          if (!(x[k + 1] <= xp[k] && xp[k] <= x[k])) ++interlacing_violations;
        const RbmConfig rbm{depth, alpha, 0.05, 1e-3};
        const InterlacingArray state = simulate_reflected_system(rbm, rng);
        if (!validate_interlacing(state, 0.0).ok()) ++interlacing_violations;
        break;
      }
    }
  }

  report.tests.push_back(bound_check("interlacing violations (bound: none)",
                                     static_cast<double>(interlacing_violations),
                                     1.0, cfg.n_samples));
  report.tests.push_back(bound_check("monotonicity violations (bound: none)",
                                     static_cast<double>(monotonicity_violations),
                                     1.0, cfg.n_samples));
  report.tests.push_back(bound_check("locality violations (bound: none)",
                                     static_cast<double>(locality_violations), 1.0,
                                     cfg.n_samples));
}

const char* claim_for(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::elementary_swap:
      return "the left exponential jump maps E_alpha(c,d) draws to E_{-alpha}(c,d)";
    case ExperimentKind::swap_theorem:
      return "one level swap exchanges adjacent perturbation parameters in the corners law";
    case ExperimentKind::double_swap:
      return "swapping the same level twice preserves the corners law yet moves almost every path";
    case ExperimentKind::global_shift:
      return "the sweep of level swaps matches the deterministic shift of the array law by -alpha*t";
    case ExperimentKind::bm_identity:
      return "reflected drifted Brownian edge values match the corners eigenvalue law at a fixed time";
    case ExperimentKind::bm_shift:
      return "exponential jumps shift the reflected Brownian edge law by -alpha*t";
    case ExperimentKind::density_oracle:
      return "sampled top-level eigenvalues match the quadrature-normalized exact density";
    case ExperimentKind::gibbs_invariance:
      return "conditional resampling of one level preserves the corners law";
    case ExperimentKind::structural:
      return "every operator application preserves interlacing, monotonicity and locality";
  }
  return "";
}

}  // namespace

const char* to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::elementary_swap: return "elementary-swap";
    case ExperimentKind::swap_theorem: return "swap-theorem";
    case ExperimentKind::double_swap: return "double-swap";
    case ExperimentKind::global_shift: return "global-shift";
    case ExperimentKind::bm_identity: return "bm-identity";
    case ExperimentKind::bm_shift: return "bm-shift";
    case ExperimentKind::density_oracle: return "density-oracle";
    case ExperimentKind::gibbs_invariance: return "gibbs-invariance";
    case ExperimentKind::structural: return "structural";
  }
  return "unknown";
}

std::optional<ExperimentKind> parse_experiment(std::string_view name) {
  for (ExperimentKind kind : all_experiments())
    if (name == to_string(kind)) return kind;
  return std::nullopt;
}

const std::vector<ExperimentKind>& all_experiments() {
  static const std::vector<ExperimentKind> kinds = {
      ExperimentKind::elementary_swap, ExperimentKind::swap_theorem,
      ExperimentKind::double_swap,     ExperimentKind::global_shift,
      ExperimentKind::bm_identity,     ExperimentKind::bm_shift,
      ExperimentKind::density_oracle,  ExperimentKind::gibbs_invariance,
      ExperimentKind::structural,
  };
  return kinds;
}

ExperimentConfig default_config(ExperimentKind kind) {
  ExperimentConfig cfg;
  cfg.kind = kind;
  switch (kind) {
    case ExperimentKind::elementary_swap:
      cfg.n_samples = 100000;
      cfg.depth = 1;
      cfg.alpha = 1.0;
      break;
    case ExperimentKind::swap_theorem:
      cfg.n_samples = 100000;
      cfg.depth = 3;
      cfg.a = {0.5, -0.2, 0.1};
      cfg.alpha = 0.7;  // informational: |a_1 - a_2|
      break;
    case ExperimentKind::double_swap:
      cfg.n_samples = 100000;
      cfg.depth = 3;
      // Wide top gap keeps the probability of a doubly-stuck path (which is
      // exp(-alpha*(d-c)) per entry) far below the 1% budget.
      cfg.a = {4.0, 0.0, 0.1};
      cfg.alpha = 4.0;
      break;
    case ExperimentKind::global_shift:
      cfg.n_samples = 100000;
      cfg.depth = 5;
      cfg.alpha = 0.4;
      break;
    case ExperimentKind::bm_identity:
      cfg.n_samples = 20000;
      cfg.depth = 3;
      cfg.alpha = 0.5;
      cfg.dt = 1e-4;
      break;
    case ExperimentKind::bm_shift:
      cfg.n_samples = 20000;
      cfg.depth = 3;
      cfg.alpha = 0.5;
      cfg.dt = 1e-4;
      break;
    case ExperimentKind::density_oracle:
      cfg.n_samples = 100000;
      cfg.depth = 2;
      cfg.a = {0.3, -0.3};
      break;
    case ExperimentKind::gibbs_invariance:
      cfg.n_samples = 100000;
      cfg.depth = 3;
      cfg.a = {0.5, -0.2, 0.1};
      break;
    case ExperimentKind::structural:
      cfg.n_samples = 10000;
      cfg.depth = 6;  // maximum random depth
      break;
  }
  return cfg;
}

void validate(const ExperimentConfig& cfg) {
  auto fail = [](const std::string& field, const std::string& why) {
    throw std::invalid_argument("config field '" + field + "': " + why);
  };
  if (cfg.n_samples < 10) fail("n", "needs at least 10 samples");
  if (cfg.depth < 1) fail("depth", "must be positive");
  if (!(cfg.t > 0.0)) fail("t", "must be positive");
  if (!cfg.a.empty() && cfg.a.size() != cfg.depth)
    fail("a", "explicit parameter vector must have one entry per level");

  const bool needs_positive_alpha =
      cfg.kind == ExperimentKind::elementary_swap ||
      cfg.kind == ExperimentKind::global_shift ||
      cfg.kind == ExperimentKind::bm_identity ||
      cfg.kind == ExperimentKind::bm_shift;
  if (needs_positive_alpha && !(cfg.alpha > 0.0)) fail("alpha", "must be positive");

  if (cfg.kind == ExperimentKind::bm_identity ||
      cfg.kind == ExperimentKind::bm_shift) {
    if (!(cfg.dt > 0.0 && cfg.dt <= cfg.t)) fail("dt", "must satisfy 0 < dt <= t");
  }
  if (cfg.kind == ExperimentKind::bm_shift && cfg.depth < 2)
    fail("depth", "the jump map needs at least two edge processes");
  if (cfg.kind == ExperimentKind::swap_theorem ||
      cfg.kind == ExperimentKind::double_swap ||
      cfg.kind == ExperimentKind::global_shift ||
      cfg.kind == ExperimentKind::gibbs_invariance) {
    if (cfg.depth < 2) fail("depth", "needs at least two levels");
  }
  if (cfg.kind == ExperimentKind::density_oracle && cfg.depth != 2)
    fail("depth", "the density oracle compares the two-level law");

  const bool needs_distinct = cfg.kind == ExperimentKind::swap_theorem ||
                              cfg.kind == ExperimentKind::double_swap ||
                              cfg.kind == ExperimentKind::density_oracle ||
                              cfg.kind == ExperimentKind::gibbs_invariance;
  if (needs_distinct && !cfg.a.empty() &&
      !PerturbationSequence(cfg.a).pairwise_distinct())
    fail("a", "parameters must be pairwise distinct");
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["experiment"] = report.experiment;
  j["claim"] = report.claim;
  j["version"] = report.version;
  j["seed"] = report.seed;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.config) cfg[key] = value;
  j["config"] = cfg;
  nlohmann::ordered_json tests = nlohmann::ordered_json::array();
  for (const TestResult& t : report.tests) {
    nlohmann::ordered_json jt;
    jt["name"] = t.name;
    jt["statistic"] = t.statistic;
    jt["p_value"] = t.p_value;
    jt["n1"] = t.n1;
    jt["n2"] = t.n2;
    jt["threshold"] = t.threshold;
    jt["passed"] = t.passed;
    tests.push_back(jt);
  }
  j["tests"] = tests;
  j["passed"] = report.passed;
  return j.dump(2) + "\n";
}

VerificationReport run_experiment(const ExperimentConfig& cfg, bool collect_samples) {
  validate(cfg);

  VerificationReport report;
  report.experiment = to_string(cfg.kind);
  report.claim = claim_for(cfg.kind);
  report.version = version_string;
  report.seed = cfg.seed;
  report.config = {
      {"experiment", to_string(cfg.kind)},
      {"n", std::to_string(cfg.n_samples)},
      {"depth", std::to_string(cfg.depth)},
      {"t", format_double(cfg.t)},
      {"alpha", format_double(cfg.alpha)},
      {"a", format_vector(cfg.a)},
      {"dt", format_double(cfg.dt)},
      {"seed", std::to_string(cfg.seed)},
      {"threads", std::to_string(cfg.threads)},
  };

  const auto start = std::chrono::steady_clock::now();
  switch (cfg.kind) {
    case ExperimentKind::elementary_swap:
      run_elementary_swap(cfg, report, collect_samples);
      break;
    case ExperimentKind::swap_theorem:
      run_swap_theorem(cfg, report, collect_samples);
      break;
    case ExperimentKind::double_swap:
      run_double_swap(cfg, report, collect_samples);
      break;
    case ExperimentKind::global_shift:
      run_global_shift(cfg, report, collect_samples);
      break;
    case ExperimentKind::bm_identity:
      run_bm_identity(cfg, report, collect_samples);
      break;
    case ExperimentKind::bm_shift:
      run_bm_shift(cfg, report, collect_samples);
      break;
    case ExperimentKind::density_oracle:
      run_density_oracle(cfg, report, collect_samples);
      break;
    case ExperimentKind::gibbs_invariance:
      run_gibbs_invariance(cfg, report, collect_samples);
      break;
    case ExperimentKind::structural:
      run_structural(cfg, report, collect_samples);
      break;
  }
  const auto end = std::chrono::steady_clock::now();
  report.wall_clock_seconds = std::chrono::duration<double>(end - start).count();

  report.passed = true;
  for (const TestResult& t : report.tests) report.passed = report.passed && t.passed;
  return report;
}

}  // namespace corners
