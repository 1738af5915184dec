#pragma once

#include <string>
#include <vector>

#include "bdhd/instance.hpp"
#include "bdhd/plan.hpp"

namespace bdhd {

enum class ViolationKind {
  SpeedViolation,
  DuplicateAssignment,
  TimeDisorder,
  BadIndex,
  CountMismatch,
};

std::string violation_kind_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct CheckReport {
  bool valid = true;
  std::vector<Violation> violations;
};

// Independent plan checker: hop feasibility from each defender's initial
// location onward, disjointness, index validity, ordering, count.
CheckReport check_plan(const Instance& inst, const InterceptionPlan& plan);

// Exhaustive oracle: tries every assignment of each event to {skip,
// defender 1..k}. Refuses when (k+1)^n exceeds 1e7 enumeration states.
int solve_bruteforce(const Instance& inst);

}  // namespace bdhd
