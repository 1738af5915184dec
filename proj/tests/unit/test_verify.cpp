#include <doctest.h>

#include "bdhd/dp_solver.hpp"
#include "bdhd/errors.hpp"
#include "bdhd/verify.hpp"
#include "test_helpers.hpp"

using namespace bdhd;

TEST_SUITE_BEGIN("verify");

namespace {

bool has_kind(const CheckReport& rep, ViolationKind kind) {
  for (const auto& v : rep.violations)
    if (v.kind == kind) return true;
  return false;
}

InterceptionPlan t1_plan() {
  InterceptionPlan plan;
  plan.assignments = {{2, 3}, {1}};
  plan.intercepted_count = 3;
  return plan;
}

}  // namespace

TEST_CASE("the reference t1 plan is valid") {
  const auto rep = check_plan(testing::make_t1(), t1_plan());
  CHECK(rep.valid);
  CHECK(rep.violations.empty());
}

TEST_CASE("empty plans are valid for any instance") {
  const Instance inst = testing::make_t1();
  CHECK(check_plan(inst, InterceptionPlan::empty(2)).valid);

  Instance no_events = inst;
  no_events.events.clear();
  CHECK(check_plan(no_events, InterceptionPlan::empty(2)).valid);
}

TEST_CASE("each violation kind is detected") {
  const Instance inst = testing::make_t1();

  InterceptionPlan p;
  p.assignments = {{2}, {3}};  // defender 2 needs 0.9 covered in 1.2s at speed 0.5
  p.intercepted_count = 2;
  CHECK(has_kind(check_plan(inst, p), ViolationKind::SpeedViolation));

  p = t1_plan();
  p.assignments[1] = {1, 3};  // event 3 also assigned to defender 1
  p.intercepted_count = 4;
  CHECK(has_kind(check_plan(inst, p), ViolationKind::DuplicateAssignment));

  p = t1_plan();
  p.assignments[0] = {2, 2};  // repeated within one defender
  p.intercepted_count = 3;
  CHECK(has_kind(check_plan(inst, p), ViolationKind::DuplicateAssignment));

  p = t1_plan();
  p.assignments[0] = {3, 2};  // indices must ascend within a sequence
  CHECK(has_kind(check_plan(inst, p), ViolationKind::TimeDisorder));

  p = t1_plan();
  p.assignments[0] = {2, 4};  // no event 4
  CHECK(has_kind(check_plan(inst, p), ViolationKind::BadIndex));

  p = t1_plan();
  p.assignments[0] = {2, 0};  // 0 is the initial location, not an event
  CHECK(has_kind(check_plan(inst, p), ViolationKind::BadIndex));

  p = t1_plan();
  p.intercepted_count = 2;
  CHECK(has_kind(check_plan(inst, p), ViolationKind::CountMismatch));

  p = t1_plan();
  p.assignments.pop_back();  // wrong defender arity
  CHECK(!check_plan(inst, p).valid);
}

TEST_CASE("waiting is allowed: early arrival then hold") {
  Instance inst;
  inst.space = BoundarySpace::circle(10.0);
  inst.defenders = {{2.0, Point::d1(0.0)}};
  inst.events = {{Point::d1(1.0), 5.0}, {Point::d1(1.0), 9.0}};
  InterceptionPlan p;
  p.assignments = {{1, 2}};
  p.intercepted_count = 2;
  CHECK(check_plan(inst, p).valid);
}

TEST_CASE("equal-time co-located events can share one defender") {
  Instance inst;
  inst.space = BoundarySpace::interval();
  inst.defenders = {{1.0, Point::d1(0.0)}};
  inst.events = {{Point::d1(0.4), 1.0}, {Point::d1(0.4), 1.0}};
  InterceptionPlan p;
  p.assignments = {{1, 2}};
  p.intercepted_count = 2;
  CHECK(check_plan(inst, p).valid);

  // But distinct locations at the same time are not teleportable.
  inst.events[1].loc = Point::d1(0.6);
  CHECK(has_kind(check_plan(inst, p), ViolationKind::SpeedViolation));
}

TEST_CASE("violation kinds have stable names") {
  CHECK(violation_kind_name(ViolationKind::SpeedViolation) == "speed-violation");
  CHECK(violation_kind_name(ViolationKind::DuplicateAssignment) == "duplicate-assignment");
  CHECK(violation_kind_name(ViolationKind::TimeDisorder) == "time-disorder");
  CHECK(violation_kind_name(ViolationKind::BadIndex) == "bad-index");
  CHECK(violation_kind_name(ViolationKind::CountMismatch) == "count-mismatch");
}

TEST_CASE("brute force matches dp where both apply") {
  for (std::uint64_t seed = 101; seed <= 130; ++seed) {
    const Instance inst =
        testing::random_instance(seed, 1 + static_cast<int>(seed % 8),
                                 1 + static_cast<int>(seed % 3));
    CHECK(solve_bruteforce(inst) ==
          solve_dp(inst, build_relation(inst)).intercepted_count);
  }
}

TEST_CASE("brute force refuses oversized instances") {
  const Instance inst = testing::random_instance(7, 100, 3);
  CHECK_THROWS_AS(solve_bruteforce(inst), InstanceTooLarge);
}

TEST_SUITE_END();
