#include <algorithm>
#include <map>
#include <sstream>

#include <doctest.h>

#include "bdhd/experiments.hpp"
#include "bdhd/verify.hpp"
#include "test_helpers.hpp"

using namespace bdhd;

TEST_SUITE_BEGIN("experiments");

TEST_CASE("format_double emits shortest round-trip forms") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(204.8) == "204.8");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
}

TEST_CASE("run_algo dispatches and labels statuses") {
  const Instance inst = testing::make_t1();
  CHECK(run_algo(inst, "dp").plan.intercepted_count == 3);
  CHECK(run_algo(inst, "dp").status == SolveStatus::Optimal);
  CHECK(run_algo(inst, "edp").status == SolveStatus::Heuristic);
  CHECK(run_algo(inst, "edp").plan.intercepted_count == 3);
  CHECK(run_algo(inst, "bnb").plan.intercepted_count == 3);
  CHECK(run_algo(inst, "oracle").plan.intercepted_count == 3);
  CHECK(run_algo(inst, "oracle").plan.assignments == InterceptionPlan::empty(2).assignments);
  CHECK_THROWS_AS(run_algo(inst, "simplex"), std::invalid_argument);
}

TEST_CASE("preset names are published") {
  const auto& names = experiment_preset_names();
  CHECK(std::find(names.begin(), names.end(), "heterogeneity") != names.end());
  CHECK(std::find(names.begin(), names.end(), "horizon") != names.end());
  CHECK(names.size() == 6);
  ExperimentConfig bad;
  bad.preset = "everything";
  bad.runs = 1;
  CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
}

TEST_CASE("heterogeneity rows are complete, keyed, and replayable") {
  ExperimentConfig cfg;
  cfg.preset = "heterogeneity";
  cfg.runs = 2;
  cfg.seed = 11;
  const auto rows = run_experiment(cfg);
  REQUIRE(rows.size() == 20);  // 10 ratio cells x 2 seeds

  std::map<std::string, int> per_ratio;
  for (const auto& row : rows) {
    CHECK(row.status == "ok");
    CHECK(row.preset == "heterogeneity");
    CHECK(row.topology == "square");
    CHECK(row.algo == "edp");
    CHECK(row.n == 150);
    CHECK(row.vsum == "15");
    CHECK(row.rate == doctest::Approx(static_cast<double>(row.count) / row.n));
    CHECK(row.wall_ms > 0.0);
    ++per_ratio[row.ratio];
  }
  CHECK(per_ratio.size() == 10);

  // Common random numbers: every cell sees the same per-run seed set.
  std::vector<std::uint64_t> seeds_r1, seeds_r9;
  for (const auto& row : rows) {
    if (row.ratio == "1") seeds_r1.push_back(row.seed);
    if (row.ratio == "9") seeds_r9.push_back(row.seed);
  }
  CHECK(seeds_r1 == seeds_r9);
  CHECK(seeds_r1.size() == 2);
  CHECK(seeds_r1[0] != seeds_r1[1]);

  // Any row replays standalone: regenerate the instance, rerun the algo.
  for (const auto& row : {rows.front(), rows.back()}) {
    GenerationConfig g;
    g.lambda = 25.0;
    g.n_events = row.n;
    g.k_defenders = 5;
    g.v_min = 1.0;
    g.v_max = std::stod(row.vmax);
    g.speed_sum_target = 15.0;
    g.seed = row.seed;
    const Instance inst = generate_instance(BoundarySpace::square(1.5), g);
    const auto res = run_algo(inst, row.algo);
    CHECK(res.plan.intercepted_count == row.count);
    CHECK(check_plan(inst, res.plan).valid);
  }
}

TEST_CASE("identical configs give identical rows, different seeds differ") {
  ExperimentConfig cfg;
  cfg.preset = "defenders";
  cfg.runs = 1;
  cfg.seed = 4;
  const auto a = run_experiment(cfg);
  const auto b = run_experiment(cfg);
  CHECK(experiment_csv(a) == experiment_csv(b));
  cfg.seed = 5;
  CHECK(experiment_csv(run_experiment(cfg)) != experiment_csv(a));
}

TEST_CASE("csv layout: header, one line per row, timing split out") {
  ExperimentConfig cfg;
  cfg.preset = "heterogeneity";
  cfg.runs = 1;
  cfg.seed = 2;
  const auto rows = run_experiment(cfg);
  const std::string csv = experiment_csv(rows);

  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "preset,topology,size,k,lambda,events,vmin,vmax,vsum,ratio,horizon,seed,"
        "algo,status,count,n,rate");
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == static_cast<int>(rows.size()));
  CHECK(csv.find("wall_ms") == std::string::npos);

  const std::string timing = experiment_timing_csv(rows);
  CHECK(timing.find("wall_ms") != std::string::npos);
  std::istringstream tin(timing);
  int tlines = -1;
  for (std::string line; std::getline(tin, line);) ++tlines;
  CHECK(tlines == static_cast<int>(rows.size()));
}

TEST_CASE("parallel execution returns the same rows as serial") {
  ExperimentConfig cfg;
  cfg.preset = "heterogeneity";
  cfg.runs = 2;
  cfg.seed = 3;
  const auto serial = run_experiment(cfg);
  cfg.jobs = 4;
  const auto parallel = run_experiment(cfg);
  CHECK(experiment_csv(serial) == experiment_csv(parallel));
}

TEST_SUITE_END();
