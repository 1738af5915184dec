#include "bdhd/verify.hpp"

#include <cmath>
#include <cstdio>

#include "bdhd/errors.hpp"
#include "bdhd/reachability.hpp"

namespace bdhd {

std::string violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::SpeedViolation: return "speed-violation";
    case ViolationKind::DuplicateAssignment: return "duplicate-assignment";
    case ViolationKind::TimeDisorder: return "time-disorder";
    case ViolationKind::BadIndex: return "bad-index";
    case ViolationKind::CountMismatch: return "count-mismatch";
  }
  return "?";
}

CheckReport check_plan(const Instance& inst, const InterceptionPlan& plan) {
  CheckReport report;
  auto flag = [&](ViolationKind kind, std::string detail) {
    report.valid = false;
    report.violations.push_back({kind, std::move(detail)});
  };

  const int n = inst.n();
  const int k = inst.k();
  if (static_cast<int>(plan.assignments.size()) != k) {
    flag(ViolationKind::BadIndex,
         "plan has " + std::to_string(plan.assignments.size()) + " defender lists, instance has " +
             std::to_string(k));
    return report;
  }

  std::vector<int> owner(static_cast<std::size_t>(n) + 1, 0);
  int total = 0;
  for (int d = 0; d < k; ++d) {
    const auto& seq = plan.assignments[d];
    const auto& def = inst.defenders[d];
    Point at = def.initial_loc;
    double at_t = 0.0;
    int prev_idx = 0;
    for (int e : seq) {
      const std::string hop = "defender " + std::to_string(d + 1) + " hop " +
                              std::to_string(prev_idx) + " -> " + std::to_string(e);
      if (e < 1 || e > n) {
        flag(ViolationKind::BadIndex, hop + " (event out of [1," + std::to_string(n) + "])");
        continue;
      }
      ++total;
      if (owner[e] != 0 && owner[e] != d + 1)
        flag(ViolationKind::DuplicateAssignment,
             "event " + std::to_string(e) + " assigned to defenders " +
                 std::to_string(owner[e]) + " and " + std::to_string(d + 1));
      else if (owner[e] == d + 1)
        flag(ViolationKind::DuplicateAssignment,
             "event " + std::to_string(e) + " repeated for defender " + std::to_string(d + 1));
      owner[e] = d + 1;
      if (e <= prev_idx) {
        flag(ViolationKind::TimeDisorder, hop + " (indices must increase)");
        prev_idx = e;
        continue;
      }
      const auto& ev = inst.events[e - 1];
      if (!can_reach(inst.space, at, at_t, ev, def.speed))
        flag(ViolationKind::SpeedViolation,
             hop + " needs speed " +
                 std::to_string(geodesic_distance(inst.space, at, ev.loc) /
                                std::max(ev.t - at_t, 1e-300)) +
                 " but has " + std::to_string(def.speed));
      at = ev.loc;
      at_t = ev.t;
      prev_idx = e;
    }
  }
  if (total != plan.intercepted_count)
    flag(ViolationKind::CountMismatch,
         "plan claims " + std::to_string(plan.intercepted_count) + " interceptions, lists " +
             std::to_string(total));
  return report;
}

namespace {

struct BruteForce {
  const Instance& inst;
  std::vector<Point> at;
  std::vector<double> at_t;
  int best = 0;

  void run(int e, int count) {
    const int n = inst.n();
    if (count > best) best = count;
    if (e > n || count + (n - e + 1) <= best) return;
    const auto& ev = inst.events[e - 1];
    for (int d = 0; d < inst.k(); ++d) {
      if (!can_reach(inst.space, at[d], at_t[d], ev, inst.defenders[d].speed)) continue;
      const Point save_p = at[d];
      const double save_t = at_t[d];
      at[d] = ev.loc;
      at_t[d] = ev.t;
      run(e + 1, count + 1);
      at[d] = save_p;
      at_t[d] = save_t;
    }
    run(e + 1, count);  // skip
  }
};

}  // namespace

int solve_bruteforce(const Instance& inst) {
  const double states = std::pow(static_cast<double>(inst.k() + 1), inst.n());
  if (states > 1e7) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "brute force needs (k+1)^n = %.3g assignments, cap is 1e7",
                  states);
    throw InstanceTooLarge(msg);
  }
  BruteForce bf{inst, {}, {}, 0};
  bf.at.reserve(inst.k());
  bf.at_t.assign(static_cast<std::size_t>(inst.k()), 0.0);
  for (const auto& d : inst.defenders) bf.at.push_back(d.initial_loc);
  bf.run(1, 0);
  return bf.best;
}

}  // namespace bdhd
