#include "doctest.h"

#include <stdexcept>

#include <sstream>

#include "corners/experiments.hpp"
#include "corners/plot_data.hpp"

using namespace corners;

TEST_CASE("experiment names round trip") {
  for (ExperimentKind kind : all_experiments()) {
    const auto parsed = parse_experiment(to_string(kind));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == kind);
  }
  CHECK_FALSE(parse_experiment("no-such-experiment").has_value());
}

TEST_CASE("default configs validate and bad fields are named") {
  for (ExperimentKind kind : all_experiments()) CHECK_NOTHROW(validate(default_config(kind)));

  auto cfg = default_config(ExperimentKind::bm_shift);
  cfg.dt = 2.0 * cfg.t;
  CHECK_THROWS_WITH_AS(validate(cfg), doctest::Contains("dt"), std::invalid_argument);

  cfg = default_config(ExperimentKind::density_oracle);
  cfg.a = {0.3, 0.3};
  CHECK_THROWS_WITH_AS(validate(cfg), doctest::Contains("'a'"), std::invalid_argument);

  cfg = default_config(ExperimentKind::swap_theorem);
  cfg.depth = 1;
  cfg.a.clear();
  CHECK_THROWS_WITH_AS(validate(cfg), doctest::Contains("depth"), std::invalid_argument);

  cfg = default_config(ExperimentKind::elementary_swap);
  cfg.n_samples = 3;
  CHECK_THROWS_WITH_AS(validate(cfg), doctest::Contains("'n'"), std::invalid_argument);
}

TEST_CASE("identical config and seed give byte-identical reports") {
  auto cfg = default_config(ExperimentKind::elementary_swap);
  cfg.n_samples = 20000;
  cfg.seed = 17;
  const auto r1 = run_experiment(cfg);
  const auto r2 = run_experiment(cfg);
  CHECK(to_json(r1) == to_json(r2));
  CHECK(r1.passed);
}

TEST_CASE("results do not depend on the thread count") {
  auto cfg = default_config(ExperimentKind::gibbs_invariance);
  cfg.n_samples = 2000;
  cfg.seed = 5;
  cfg.threads = 1;
  const auto serial = run_experiment(cfg);
  cfg.threads = 4;
  const auto parallel = run_experiment(cfg);
  REQUIRE(serial.tests.size() == parallel.tests.size());
  for (std::size_t i = 0; i < serial.tests.size(); ++i) {
    CHECK(serial.tests[i].statistic == parallel.tests[i].statistic);
    CHECK(serial.tests[i].p_value == parallel.tests[i].p_value);
  }
}

TEST_CASE("small structural sweep finds no violations") {
  auto cfg = default_config(ExperimentKind::structural);
  cfg.n_samples = 500;
  cfg.seed = 23;
  const auto report = run_experiment(cfg);
  CHECK(report.passed);
  for (const auto& t : report.tests) CHECK(t.statistic == 0.0);
}

TEST_CASE("small swap-theorem run passes its ks battery") {
  auto cfg = default_config(ExperimentKind::swap_theorem);
  cfg.n_samples = 4000;
  cfg.seed = 11;
  const auto report = run_experiment(cfg);
  CHECK(report.tests.size() == 12);
  CHECK(report.passed);
}

TEST_CASE("sample dumps carry the series plot-data consumes") {
  auto cfg = default_config(ExperimentKind::elementary_swap);
  cfg.n_samples = 1000;
  const auto report = run_experiment(cfg, true);
  REQUIRE(report.sample_dump.count("swapped") == 1);
  CHECK(report.sample_dump.at("swapped").size() == 1000);

  std::ostringstream ecdf;
  write_ecdf_csv(report.sample_dump.at("swapped"), ecdf);
  CHECK(ecdf.str().rfind("value,ecdf\n", 0) == 0);
}

TEST_CASE("report json carries the resolved config") {
  auto cfg = default_config(ExperimentKind::density_oracle);
  cfg.seed = 3;
  cfg.n_samples = 2000;
  const auto report = run_experiment(cfg);
  const auto json = to_json(report);
  CHECK(json.find("\"experiment\": \"density-oracle\"") != std::string::npos);
  CHECK(json.find("\"a\": \"0.3,-0.3\"") != std::string::npos);
  CHECK(json.find("\"seed\": 3") != std::string::npos);
  CHECK(json.find("wall_clock") == std::string::npos);
}

TEST_CASE("plot data writers") {
  const std::vector<double> three{1.0, 2.0, 3.0};
  std::ostringstream ecdf;
  write_ecdf_csv(three, ecdf);
  CHECK(ecdf.str() ==
        "value,ecdf\n1,0.333333\n2,0.666667\n3,1\n");

  std::ostringstream qq;
  write_qq_csv(three, three, qq);
  std::istringstream lines(qq.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "quantile_a,quantile_b");
  std::string row;
  while (std::getline(lines, row)) {
    const auto comma = row.find(',');
    CHECK(row.substr(0, comma) == row.substr(comma + 1));
  }

  CHECK_THROWS_AS(write_ecdf_csv({}, ecdf), std::invalid_argument);

  std::ostringstream hist;
  write_histogram_csv(three, 3, hist);
  CHECK(hist.str().rfind("bin_center,density\n", 0) == 0);
}
