#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "bdhd/edp.hpp"
#include "bdhd/errors.hpp"
#include "bdhd/experiments.hpp"
#include "bdhd/flow_solver.hpp"
#include "bdhd/instance.hpp"
#include "bdhd/online.hpp"
#include "bdhd/reachability.hpp"
#include "bdhd/verify.hpp"

namespace py = pybind11;

namespace {

using namespace bdhd;

Instance parse_instance(const std::string& text) {
  return instance_from_json(nlohmann::json::parse(text));
}

BoundarySpace space_of(const std::string& topology,
                       const std::optional<double>& size) {
  if (topology == "interval") return BoundarySpace::interval();
  if (!size || *size <= 0.0) {
    throw std::invalid_argument("a positive size is required for " + topology);
  }
  if (topology == "circle") return BoundarySpace::circle(*size);
  if (topology == "square") return BoundarySpace::square(*size);
  if (topology == "sphere") return BoundarySpace::sphere(*size);
  throw std::invalid_argument("unknown topology '" + topology + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "boundary-defense solver core (JSON-string interface)";

  py::register_exception<ParseError>(m, "InstanceParseError");
  py::register_exception<StateSpaceTooLarge>(m, "StateSpaceError");
  py::register_exception<InstanceTooLarge>(m, "InstanceTooLargeError");

  m.def(
      "generate",
      [](const std::string& topology, std::optional<double> size,
         double lambda, int events, int defenders, double vmin, double vmax,
         std::optional<double> vsum, std::uint64_t seed) {
        GenerationConfig cfg;
        cfg.lambda = lambda;
        cfg.n_events = events;
        cfg.k_defenders = defenders;
        cfg.v_min = vmin;
        cfg.v_max = vmax;
        cfg.speed_sum_target = vsum;
        cfg.seed = seed;
        return instance_to_json(generate_instance(space_of(topology, size), cfg))
            .dump();
      },
      py::arg("topology"), py::arg("size") = std::nullopt,
      py::arg("lam") = 1.0, py::arg("events") = 0, py::arg("defenders") = 1,
      py::arg("vmin") = 1.0, py::arg("vmax") = 1.0,
      py::arg("vsum") = std::nullopt, py::arg("seed") = 0,
      "Sample an instance; returns its JSON text.");

  m.def(
      "solve",
      [](const std::string& instance_json, const std::string& algo,
         double time_limit, bool single_pass) {
        const Instance inst = parse_instance(instance_json);
        if (algo == "oracle") {
          const int count = solve_bruteforce(inst);
          nlohmann::json out;
          out["plan"] = nullptr;
          out["report"] = {{"algo", algo},
                           {"count", count},
                           {"rate", interception_rate(count, inst.n())},
                           {"status", "optimal"}};
          return out.dump();
        }
        EdpOptions edp;
        edp.single_pass = single_pass;
        const AlgoResult res = run_algo(inst, algo, time_limit, edp);
        nlohmann::json out;
        out["plan"] = plan_to_json(res.plan);
        out["report"] = {
            {"algo", algo},
            {"count", res.plan.intercepted_count},
            {"rate", interception_rate(res.plan.intercepted_count, inst.n())},
            {"status", status_name(res.status)}};
        return out.dump();
      },
      py::arg("instance_json"), py::arg("algo") = "dp",
      py::arg("time_limit") = 60.0, py::arg("single_pass") = false,
      "Solve with dp | edp | bnb | oracle; returns {plan, report} JSON text.");

  m.def(
      "check_plan",
      [](const std::string& instance_json, const std::string& plan_json) {
        const Instance inst = parse_instance(instance_json);
        const InterceptionPlan plan =
            plan_from_json(nlohmann::json::parse(plan_json));
        const CheckReport rep = check_plan(inst, plan);
        nlohmann::json out;
        out["valid"] = rep.valid;
        out["violations"] = nlohmann::json::array();
        for (const Violation& v : rep.violations) {
          out["violations"].push_back(
              {{"kind", violation_kind_name(v.kind)}, {"detail", v.detail}});
        }
        return out.dump();
      },
      py::arg("instance_json"), py::arg("plan_json"),
      "Audit a plan; returns {valid, violations} JSON text.");

  m.def(
      "simulate",
      [](const std::string& instance_json, double horizon,
         bool record_trajectories) {
        const Instance inst = parse_instance(instance_json);
        SimulateOptions opts;
        opts.record_trajectories = record_trajectories;
        return simulation_report_to_json(
                   simulate_online(inst, HorizonParams{horizon}, opts))
            .dump();
      },
      py::arg("instance_json"), py::arg("horizon"),
      py::arg("record_trajectories") = false,
      "Run the online simulation; returns the report JSON text.");

  m.def(
      "lp_text",
      [](const std::string& instance_json) {
        const Instance inst = parse_instance(instance_json);
        return lp_text(build_flow_model(inst, build_relation(inst)));
      },
      py::arg("instance_json"), "LP export of the instance's flow model.");

  m.def(
      "reach",
      [](const std::string& instance_json, int a, int d, bool forward) {
        const Instance inst = parse_instance(instance_json);
        const ReachabilityRelation rel = build_relation(inst);
        return forward ? rel.next(a, d) : rel.prev(a, d);
      },
      py::arg("instance_json"), py::arg("a"), py::arg("d"),
      py::arg("forward") = true,
      "next(a, d) or prev(a, d) as a list of event indices.");
}
