#include "bdhd/plan.hpp"

#include "bdhd/errors.hpp"

namespace bdhd {

nlohmann::json plan_to_json(const InterceptionPlan& plan) {
  nlohmann::json j;
  j["count"] = plan.intercepted_count;
  j["assignments"] = nlohmann::json::array();
  for (const auto& seq : plan.assignments) j["assignments"].push_back(seq);
  return j;
}

InterceptionPlan plan_from_json(const nlohmann::json& j) {
  InterceptionPlan plan;
  if (!j.is_object() || !j.contains("count") || !j.contains("assignments"))
    throw ParseError("(plan)", "expected {count, assignments}");
  plan.intercepted_count = j["count"].get<int>();
  for (const auto& seq : j["assignments"])
    plan.assignments.push_back(seq.get<std::vector<int>>());
  return plan;
}

std::string status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::FeasibleTimeout: return "feasible-timeout";
    case SolveStatus::External: return "external";
    case SolveStatus::Heuristic: return "heuristic";
  }
  return "?";
}

}  // namespace bdhd
