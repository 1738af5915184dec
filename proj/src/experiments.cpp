#include "bdhd/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bdhd/dp_solver.hpp"
#include "bdhd/errors.hpp"
#include "bdhd/flow_solver.hpp"
#include "bdhd/online.hpp"
#include "bdhd/reachability.hpp"
#include "bdhd/rng.hpp"
#include "bdhd/verify.hpp"

namespace bdhd {

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

AlgoResult run_algo(const Instance& inst, const std::string& algo,
                    double time_limit_s, const EdpOptions& edp) {
  AlgoResult out;
  if (algo == "dp") {
    out.plan = solve_dp(inst, build_relation(inst));
  } else if (algo == "edp") {
    out.plan = solve_edp(inst, build_relation(inst), edp);
    out.status = SolveStatus::Heuristic;
  } else if (algo == "bnb") {
    auto res = solve_branch_and_bound(
        build_flow_model(inst, build_relation(inst)), time_limit_s);
    out.plan = std::move(res.plan);
    out.status = res.status;
  } else if (algo == "oracle") {
    out.plan = InterceptionPlan::empty(inst.k());
    out.plan.intercepted_count = solve_bruteforce(inst);
  } else {
    throw std::invalid_argument("unknown algorithm '" + algo + "'");
  }
  return out;
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct TaskSpec {
  BoundarySpace space;
  GenerationConfig gen;
  std::string algo;     // dp | edp | bnb | oracle | online
  double horizon = 0.0;  // online only
  std::string ratio;     // heterogeneity cell label
};

ExperimentRow execute_task(const std::string& preset, const TaskSpec& t,
                           double time_limit_s, const EdpOptions& edp) {
  ExperimentRow row;
  row.preset = preset;
  row.topology = topology_name(t.space.kind);
  row.size =
      t.space.kind == Topology::Interval ? "" : format_double(t.space.size);
  row.k = std::to_string(t.gen.k_defenders);
  row.lambda = format_double(t.gen.lambda);
  row.events = std::to_string(t.gen.n_events);
  row.vmin = format_double(t.gen.v_min);
  row.vmax = format_double(t.gen.v_max);
  row.vsum =
      t.gen.speed_sum_target ? format_double(*t.gen.speed_sum_target) : "";
  row.ratio = t.ratio;
  row.horizon = t.algo == "online" ? format_double(t.horizon) : "";
  row.seed = t.gen.seed;
  row.algo = t.algo;

  const auto start = std::chrono::steady_clock::now();
  try {
    const Instance inst = generate_instance(t.space, t.gen);
    row.n = inst.n();
    if (t.algo == "online") {
      SimulateOptions sopts;
      sopts.edp = edp;
      const SimulationReport rep =
          simulate_online(inst, HorizonParams{t.horizon}, sopts);
      row.count = rep.intercepted_count;
      row.rate = rep.rate;
    } else {
      const AlgoResult res = run_algo(inst, t.algo, time_limit_s, edp);
      row.count = res.plan.intercepted_count;
      row.rate = interception_rate(row.count, inst.n());
      if (t.algo != "oracle" && !check_plan(inst, res.plan).valid) {
        row.status = "plan-invalid";
      } else if (res.status == SolveStatus::FeasibleTimeout) {
        row.status = "feasible-timeout";
      }
    }
  } catch (const StateSpaceTooLarge&) {
    row.status = "state-space-too-large";
  } catch (const InstanceTooLarge&) {
    row.status = "instance-too-large";
  } catch (const std::exception& e) {
    std::string what = e.what();
    std::replace(what.begin(), what.end(), ',', ';');
    std::replace(what.begin(), what.end(), '\n', ' ');
    row.status = "error: " + what;
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return row;
}

GenerationConfig base_gen(int k, double lambda, int n, double vmin,
                          double vmax) {
  GenerationConfig g;
  g.k_defenders = k;
  g.lambda = lambda;
  g.n_events = n;
  g.v_min = vmin;
  g.v_max = vmax;
  return g;
}

// Every cell of a preset shares the per-run instance seed, so sweeps are
// paired: a lambda or speed change perturbs only what it must.
std::vector<TaskSpec> build_tasks(const ExperimentConfig& cfg, int runs) {
  std::vector<TaskSpec> tasks;
  const auto seed_for = [&](int run) {
    return mix_seed(cfg.seed, static_cast<std::uint64_t>(run));
  };
  const BoundarySpace big_circle = BoundarySpace::circle(kTwoPi);

  if (cfg.preset == "scaling") {
    for (int k : {2, 3, 4}) {
      for (const char* algo : {"dp", "bnb", "edp"}) {
        for (int r = 0; r < runs; ++r) {
          TaskSpec t{big_circle, base_gen(k, k, 60, 1.0, 5.0), algo, 0.0, ""};
          t.gen.seed = seed_for(r);
          tasks.push_back(std::move(t));
        }
      }
    }
  } else if (cfg.preset == "defenders") {
    for (int k : {2, 3, 4}) {
      for (const char* algo : {"dp", "edp"}) {
        for (int r = 0; r < runs; ++r) {
          TaskSpec t{big_circle, base_gen(k, 2.0 * k, 40, 1.0, 5.0), algo, 0.0,
                     ""};
          t.gen.seed = seed_for(r);
          tasks.push_back(std::move(t));
        }
      }
    }
  } else if (cfg.preset == "heterogeneity") {
    // The speed-diversity jump is strongest on the 2-D square; the 1-D circle
    // shows the same shape at roughly half the magnitude.
    for (int ratio = 1; ratio <= 10; ++ratio) {
      for (int r = 0; r < runs; ++r) {
        TaskSpec t{BoundarySpace::square(1.5), base_gen(5, 25.0, 150, 1.0, ratio),
                   "edp", 0.0, std::to_string(ratio)};
        t.gen.speed_sum_target = 15.0;
        t.gen.seed = seed_for(r);
        tasks.push_back(std::move(t));
      }
    }
  } else if (cfg.preset == "lambda-grid") {
    for (int k : {1, 5, 10, 15, 20}) {
      for (double lambda : {1.0, 10.0, 20.0, 40.0, 60.0}) {
        for (int r = 0; r < runs; ++r) {
          TaskSpec t{big_circle, base_gen(k, lambda, 100, 1.0, 1.0), "edp",
                     0.0, ""};
          t.gen.seed = seed_for(r);
          tasks.push_back(std::move(t));
        }
      }
    }
  } else if (cfg.preset == "topology") {
    const BoundarySpace spaces[] = {
        BoundarySpace::interval(), BoundarySpace::circle(1.0),
        BoundarySpace::square(1.0),
        BoundarySpace::sphere(std::sqrt(1.0 / (2.0 * kTwoPi)))};
    for (const BoundarySpace& space : spaces) {
      for (double lambda : {1.0, 5.0, 10.0, 25.0, 50.0, 100.0, 200.0}) {
        for (int r = 0; r < runs; ++r) {
          TaskSpec t{space, base_gen(5, lambda, 100, 1.0, 5.0), "edp", 0.0,
                     ""};
          t.gen.seed = seed_for(r);
          tasks.push_back(std::move(t));
        }
      }
    }
  } else if (cfg.preset == "horizon") {
    for (double horizon : {0.05, 0.4, 3.2, 25.6, 204.8}) {
      for (int r = 0; r < runs; ++r) {
        TaskSpec t{big_circle, base_gen(5, 5.0, 400, 1.0, 5.0), "online",
                   horizon, ""};
        t.gen.seed = seed_for(r);
        tasks.push_back(std::move(t));
      }
    }
    for (int r = 0; r < runs; ++r) {
      TaskSpec t{big_circle, base_gen(5, 5.0, 400, 1.0, 5.0), "edp", 0.0, ""};
      t.gen.seed = seed_for(r);
      tasks.push_back(std::move(t));
    }
  } else {
    throw std::invalid_argument("unknown preset '" + cfg.preset + "'");
  }
  return tasks;
}

int default_runs(const std::string& preset) {
  if (preset == "scaling") return 3;
  if (preset == "defenders") return 10;
  if (preset == "heterogeneity") return 100;
  return 20;
}

void append_csv_key(std::string& out, const ExperimentRow& r) {
  out += r.preset;
  out += ',';
  out += r.topology;
  out += ',';
  out += r.size;
  out += ',';
  out += r.k;
  out += ',';
  out += r.lambda;
  out += ',';
  out += r.events;
  out += ',';
  out += r.vmin;
  out += ',';
  out += r.vmax;
  out += ',';
  out += r.vsum;
  out += ',';
  out += r.ratio;
  out += ',';
  out += r.horizon;
  out += ',';
  out += std::to_string(r.seed);
  out += ',';
  out += r.algo;
}

constexpr const char* kKeyHeader =
    "preset,topology,size,k,lambda,events,vmin,vmax,vsum,ratio,horizon,seed,"
    "algo";

}  // namespace

const std::vector<std::string>& experiment_preset_names() {
  static const std::vector<std::string> names = {
      "scaling",     "defenders", "heterogeneity",
      "lambda-grid", "topology",  "horizon"};
  return names;
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
  const int runs = cfg.runs > 0 ? cfg.runs : default_runs(cfg.preset);
  const std::vector<TaskSpec> tasks = build_tasks(cfg, runs);
  std::vector<ExperimentRow> rows(tasks.size());

  const int jobs =
      std::max(1, std::min<int>(cfg.jobs, static_cast<int>(tasks.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      rows[i] = execute_task(cfg.preset, tasks[i], cfg.time_limit_s, cfg.edp);
    }
    return rows;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      rows[i] = execute_task(cfg.preset, tasks[i], cfg.time_limit_s, cfg.edp);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return rows;
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
  std::string out = std::string(kKeyHeader) + ",status,count,n,rate\n";
  for (const ExperimentRow& r : rows) {
    append_csv_key(out, r);
    out += ',';
    out += r.status;
    out += ',';
    out += std::to_string(r.count);
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    out += format_double(r.rate);
    out += '\n';
  }
  return out;
}

std::string experiment_timing_csv(const std::vector<ExperimentRow>& rows) {
  std::string out = std::string(kKeyHeader) + ",wall_ms\n";
  char buf[32];
  for (const ExperimentRow& r : rows) {
    append_csv_key(out, r);
    std::snprintf(buf, sizeof(buf), ",%.3f\n", r.wall_ms);
    out += buf;
  }
  return out;
}

}  // namespace bdhd
