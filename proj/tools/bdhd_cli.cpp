#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bdhd/edp.hpp"
#include "bdhd/errors.hpp"
#include "bdhd/experiments.hpp"
#include "bdhd/flow_solver.hpp"
#include "bdhd/instance.hpp"
#include "bdhd/online.hpp"
#include "bdhd/reachability.hpp"
#include "bdhd/verify.hpp"

namespace {

using namespace bdhd;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out.flush()) throw std::runtime_error("write failed for " + path);
}

BoundarySpace make_space(const std::string& topology, bool has_size,
                         double size) {
  if (topology == "interval") {
    if (has_size) {
      throw CLI::ValidationError("--size", "the interval is fixed to [0,1]");
    }
    return BoundarySpace::interval();
  }
  if (!has_size || size <= 0.0) {
    throw CLI::ValidationError("--size",
                               "a positive --size is required for " + topology);
  }
  if (topology == "circle") return BoundarySpace::circle(size);
  if (topology == "square") return BoundarySpace::square(size);
  return BoundarySpace::sphere(size);
}

std::string trajectory_csv(const Instance& inst,
                           const SimulationReport& report) {
  const int dim = inst.space.dim();
  std::string out = "defender,t";
  const char* axes[] = {",x", ",y", ",z"};
  for (int i = 0; i < dim; ++i) out += axes[i];
  out += '\n';
  for (std::size_t d = 0; d < report.trajectories.size(); ++d) {
    for (const TrajectorySample& s : report.trajectories[d]) {
      out += std::to_string(d + 1);
      out += ',';
      out += format_double(s.t);
      for (int i = 0; i < dim; ++i) {
        out += ',';
        out += format_double(s.loc.c[i]);
      }
      out += '\n';
    }
  }
  return out;
}

double wall_ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boundary defense with heterogeneous defenders"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  int jobs = 1;
  double time_limit = 60.0;
  std::string out_path;
  app.add_option("--seed", seed, "base random seed")->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads for experiments")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--time-limit", time_limit, "solver time limit in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("-o,--output", out_path, "output file (default stdout)");

  // ---- generate ----
  auto* gen = app.add_subcommand("generate", "sample a random instance");
  gen->fallthrough();
  std::string topology;
  double size = 0.0;
  double lambda = 1.0;
  int events = 0;
  int defenders = 1;
  double vmin = 1.0;
  double vmax = 1.0;
  double vsum = 0.0;
  gen->add_option("--topology", topology, "interval | circle | square | sphere")
      ->required()
      ->check(CLI::IsMember({"interval", "circle", "square", "sphere"}));
  auto* size_opt =
      gen->add_option("--size", size, "circumference / side / radius");
  gen->add_option("--lambda", lambda, "attack rate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("--events", events, "number of attack events")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  gen->add_option("--defenders", defenders, "number of defenders")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("--vmin", vmin, "slowest defender speed")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("--vmax", vmax, "fastest defender speed")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* vsum_opt = gen->add_option(
      "--vsum", vsum, "rescale sampled speeds to this total (optional)");
  gen->callback([&] {
    if (vmax < vmin) {
      throw CLI::ValidationError("--vmax", "must be >= --vmin");
    }
    const BoundarySpace space =
        make_space(topology, size_opt->count() > 0, size);
    GenerationConfig cfg;
    cfg.lambda = lambda;
    cfg.n_events = events;
    cfg.k_defenders = defenders;
    cfg.v_min = vmin;
    cfg.v_max = vmax;
    if (vsum_opt->count() > 0) cfg.speed_sum_target = vsum;
    cfg.seed = seed;
    const Instance inst = generate_instance(space, cfg);
    write_text(out_path, instance_to_json(inst).dump(2) + "\n");
  });

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "compute an interception plan");
  solve->fallthrough();
  std::string solve_algo;
  std::string solve_input;
  std::string solver_cmd;
  bool single_pass = false;
  solve->add_option("--algo", solve_algo, "dp | edp | bnb | external | oracle")
      ->required()
      ->check(CLI::IsMember({"dp", "edp", "bnb", "external", "oracle"}));
  solve->add_option("instance", solve_input, "instance JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--solver", solver_cmd,
                    "external solver command (default $BDHD_EXTERNAL_SOLVER)");
  solve->add_flag("--single-pass", single_pass,
                  "stop pairing sweeps after one pass");
  solve->callback([&] {
    const Instance inst = load_instance(solve_input);
    const auto t0 = std::chrono::steady_clock::now();
    std::optional<InterceptionPlan> plan;
    SolveStatus status = SolveStatus::Optimal;
    int count = 0;
    if (solve_algo == "external") {
      std::string cmd = solver_cmd;
      if (cmd.empty()) {
        if (const char* env = std::getenv("BDHD_EXTERNAL_SOLVER")) cmd = env;
      }
      const FlowModel model = build_flow_model(inst, build_relation(inst));
      const auto lp = std::filesystem::temp_directory_path() /
                      ("bdhd-" + std::to_string(::getpid()) + ".lp");
      export_lp(model, lp.string());
      FlowSolveResult res = solve_external(model, lp.string(), cmd, time_limit);
      plan = std::move(res.plan);
      status = res.status;
      count = plan->intercepted_count;
    } else if (solve_algo == "oracle") {
      count = solve_bruteforce(inst);
    } else {
      EdpOptions edp;
      edp.single_pass = single_pass;
      AlgoResult res;
      try {
        res = run_algo(inst, solve_algo, time_limit, edp);
      } catch (const StateSpaceTooLarge& e) {
        throw std::runtime_error(std::string(e.what()) +
                                 " (try --algo edp instead)");
      }
      plan = std::move(res.plan);
      status = res.status;
      count = plan->intercepted_count;
    }
    const double wall = wall_ms_since(t0);
    nlohmann::json out;
    out["plan"] = plan ? plan_to_json(*plan) : nlohmann::json(nullptr);
    out["report"] = {{"algo", solve_algo},
                     {"count", count},
                     {"rate", interception_rate(count, inst.n())},
                     {"status", status_name(status)}};
    write_text(out_path, out.dump(2) + "\n");
    std::cerr << "# algo=" << solve_algo << " wall_ms=" << wall << "\n";
  });

  // ---- export-lp ----
  auto* exp_lp = app.add_subcommand("export-lp", "write the flow model as LP");
  exp_lp->fallthrough();
  std::string lp_input;
  exp_lp->add_option("instance", lp_input, "instance JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  exp_lp->callback([&] {
    const Instance inst = load_instance(lp_input);
    write_text(out_path, lp_text(build_flow_model(inst, build_relation(inst))));
  });

  // ---- simulate ----
  auto* sim = app.add_subcommand("simulate", "finite-horizon online run");
  sim->fallthrough();
  std::string horizon_str;
  std::string sim_input;
  std::string traj_path;
  bool sim_single_pass = false;
  sim->add_option("--horizon", horizon_str, "look-ahead T > 0, or 'inf'")
      ->required();
  sim->add_option("instance", sim_input, "instance JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  sim->add_option("--traj-csv", traj_path,
                  "also write defender trajectories to this CSV");
  sim->add_flag("--single-pass", sim_single_pass,
                "stop pairing sweeps after one pass");
  sim->callback([&] {
    double T = 0.0;
    if (horizon_str == "inf" || horizon_str == "infinity") {
      T = std::numeric_limits<double>::infinity();
    } else {
      try {
        T = std::stod(horizon_str);
      } catch (const std::exception&) {
        throw CLI::ValidationError("--horizon", "expected a number or 'inf'");
      }
    }
    if (!(T > 0.0)) {
      throw CLI::ValidationError("--horizon", "must be > 0");
    }
    const Instance inst = load_instance(sim_input);
    SimulateOptions opts;
    opts.edp.single_pass = sim_single_pass;
    opts.record_trajectories = !traj_path.empty();
    SimulationReport report = simulate_online(inst, HorizonParams{T}, opts);
    if (!traj_path.empty()) {
      write_text(traj_path, trajectory_csv(inst, report));
      report.trajectories.clear();  // keep the JSON lean
    }
    write_text(out_path, simulation_report_to_json(report).dump(2) + "\n");
  });

  // ---- experiment ----
  auto* exp = app.add_subcommand("experiment", "run a study preset");
  exp->fallthrough();
  std::string preset;
  int runs = 0;
  bool exp_single_pass = false;
  exp->add_option("--preset", preset,
                  "scaling | defenders | heterogeneity | lambda-grid | "
                  "topology | horizon")
      ->required()
      ->check(CLI::IsMember(experiment_preset_names()));
  exp->add_option("--runs", runs, "seeds per grid cell (0 = preset default)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  exp->add_flag("--single-pass", exp_single_pass,
                "stop pairing sweeps after one pass");
  exp->callback([&] {
    ExperimentConfig cfg;
    cfg.preset = preset;
    cfg.runs = runs;
    cfg.seed = seed;
    cfg.time_limit_s = time_limit;
    cfg.jobs = jobs;
    cfg.edp.single_pass = exp_single_pass;
    const auto rows = run_experiment(cfg);
    const std::string primary = experiment_csv(rows);
    const std::string timing = experiment_timing_csv(rows);
    if (out_path.empty() || out_path == "-") {
      std::cout << primary;
      std::cerr << timing;
    } else {
      write_text(out_path, primary);
      write_text(out_path + ".timing", timing);
      std::cerr << "# wrote " << out_path << " and " << out_path
                << ".timing\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
