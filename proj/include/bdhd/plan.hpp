#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace bdhd {

// Disjoint per-defender sequences of intercepted events (1-based indices,
// ascending). Feasibility of every hop is checked by verify::check_plan.
struct InterceptionPlan {
  std::vector<std::vector<int>> assignments;
  int intercepted_count = 0;

  static InterceptionPlan empty(int k) {
    InterceptionPlan p;
    p.assignments.resize(static_cast<std::size_t>(k));
    return p;
  }

  bool operator==(const InterceptionPlan&) const = default;
};

nlohmann::json plan_to_json(const InterceptionPlan& plan);
InterceptionPlan plan_from_json(const nlohmann::json& j);

enum class SolveStatus { Optimal, FeasibleTimeout, External, Heuristic };

std::string status_name(SolveStatus s);

struct SolveReport {
  std::string algo;
  int count = 0;
  double rate = 0.0;
  double wall_ms = 0.0;
  std::string status;
};

inline double interception_rate(int count, int n) {
  return n == 0 ? 1.0 : static_cast<double>(count) / n;
}

}  // namespace bdhd
