#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bdhd/instance.hpp"
#include "bdhd/plan.hpp"
#include "bdhd/reachability.hpp"

namespace bdhd {

// One unit-capacity arc: defender `defender` may go serve event `to` right
// after `from` (0 = its initial location). Arcs always point forward in the
// event order, so the per-defender graphs are DAGs even for simultaneous
// co-located events.
struct FlowEdge {
  int from = 0;
  int to = 0;
  int defender = 0;

  bool operator==(const FlowEdge&) const = default;
};

// Path formulation: binary edge variables per arc plus one binary intercept
// variable per event; an event counts only if some defender's path enters it.
struct FlowModel {
  Instance inst;
  ReachabilityRelation rel;
  std::vector<FlowEdge> edges;  // sorted by (from, to, defender)

  int n() const { return inst.n(); }
  int k() const { return inst.k(); }
  std::size_t edge_count() const { return edges.size(); }
  std::size_t variable_count() const {
    return edges.size() + static_cast<std::size_t>(inst.n());
  }
  // serve + per-(event, defender) conservation + per-defender source caps
  std::size_t constraint_count() const {
    const auto n = static_cast<std::size_t>(inst.n());
    const auto k = static_cast<std::size_t>(inst.k());
    return n * k + n + k;
  }
};

FlowModel build_flow_model(const Instance& inst, const ReachabilityRelation& rel);

struct FlowSolveResult {
  InterceptionPlan plan;
  SolveStatus status = SolveStatus::Optimal;
};

// Exact combinatorial search: events in time order, branch on the serving
// defender (index order) or skipping; bound = current count + future events
// still reachable by someone. Deterministic; returns the incumbent with
// feasible-timeout status when the deadline cuts the search off.
FlowSolveResult solve_branch_and_bound(const FlowModel& model,
                                       double time_limit_s = 60.0);

// LP text (Maximize / Subject To / Binary / End); byte-stable per model.
// Variables x_{i} and e_{from}_{to}_{defender} with 1-based defenders.
std::string lp_text(const FlowModel& model);
void export_lp(const FlowModel& model, const std::string& path);

// A plan expressed in model variables (parallel to model.edges / events).
struct FlowValues {
  std::vector<int> edge_value;
  std::vector<int> intercept_value;  // index 0 = event 1
};

FlowValues plan_to_flow_values(const FlowModel& model,
                               const InterceptionPlan& plan);

// Names of violated constraints, empty when the values satisfy the model.
std::vector<std::string> flow_violations(const FlowModel& model,
                                         const FlowValues& values);

// Writes the model to lp_path, runs `solver_command lp_path --time-limit S
// --sol out`, and rebuilds the plan from the solution file ("name value"
// lines). Throws SolverNotFoundError / UnparsableSolutionError /
// InvalidPlanError.
FlowSolveResult solve_external(const FlowModel& model,
                               const std::string& lp_path,
                               const std::string& solver_command,
                               double time_limit_s = 60.0);

}  // namespace bdhd
