#include <doctest.h>

#include "bdhd/dp_solver.hpp"
#include "bdhd/edp.hpp"
#include "bdhd/verify.hpp"
#include "test_helpers.hpp"

using namespace bdhd;

TEST_SUITE_BEGIN("edp");

TEST_CASE("pairing is exact for two defenders") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance inst =
        testing::random_instance(seed, 10 + static_cast<int>(seed % 50), 2, 5.0, 0.5, 5.0);
    const auto rel = build_relation(inst);
    const auto edp = solve_edp(inst, rel);
    CHECK(edp.intercepted_count == solve_dp(inst, rel).intercepted_count);
    CHECK(check_plan(inst, edp).valid);
  }
}

TEST_CASE("an idle extra defender does not disturb the t1 optimum") {
  Instance inst = testing::make_t1();
  inst.defenders.push_back({0.01, Point::d1(0.5)});
  const auto plan = solve_edp(inst, build_relation(inst));
  CHECK(plan.intercepted_count == 3);
  CHECK(check_plan(inst, plan).valid);
}

TEST_CASE("single defender reduces to plain dp") {
  for (std::uint64_t seed = 11; seed <= 16; ++seed) {
    const Instance inst = testing::random_instance(seed, 20, 1);
    const auto rel = build_relation(inst);
    CHECK(solve_edp(inst, rel).intercepted_count ==
          solve_dp(inst, rel).intercepted_count);
  }
}

TEST_CASE("never beats the oracle, usually matches it") {
  int matches = 0, total = 0;
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const Instance inst =
        testing::random_instance(seed, 1 + static_cast<int>(seed % 7),
                                 2 + static_cast<int>(seed % 3));
    const auto plan = solve_edp(inst, build_relation(inst));
    const int best = solve_bruteforce(inst);
    CHECK(plan.intercepted_count <= best);
    CHECK(check_plan(inst, plan).valid);
    ++total;
    if (plan.intercepted_count == best) ++matches;
  }
  CHECK(matches >= total * 9 / 10);
}

TEST_CASE("results are deterministic, including the shuffled ordering") {
  const Instance inst = testing::random_instance(21, 40, 4, 5.0, 1.0, 5.0);
  const auto rel = build_relation(inst);
  const std::vector<PairingOrder> orders = {{PairingOrderKind::SeededShuffle, 77}};
  const auto a = solve_edp_detailed(inst, rel, orders);
  const auto b = solve_edp_detailed(inst, rel, orders);
  CHECK(a.plan == b.plan);
  CHECK(a.winning_order == orders[0]);
}

TEST_CASE("empty order list falls back to the instance-seeded defaults") {
  const Instance inst = testing::random_instance(33, 30, 3, 5.0, 1.0, 5.0);
  const auto rel = build_relation(inst);
  const std::uint64_t seed = static_cast<std::uint64_t>(*inst.meta.seed);
  const auto implicit = solve_edp(inst, rel);
  const auto explicit_orders = solve_edp(inst, rel, default_pairing_orders(seed), {});
  CHECK(implicit == explicit_orders);
}

TEST_CASE("single pass never beats the fixed point") {
  for (std::uint64_t seed = 40; seed < 48; ++seed) {
    const Instance inst = testing::random_instance(seed, 35, 4, 5.0, 1.0, 5.0);
    const auto rel = build_relation(inst);
    EdpOptions one;
    one.single_pass = true;
    CHECK(solve_edp(inst, rel, one).intercepted_count <=
          solve_edp(inst, rel).intercepted_count);
  }
}

TEST_CASE("order names are stable identifiers") {
  CHECK(pairing_order_name({PairingOrderKind::LexAscending, 0}) == "lex-ascending");
  CHECK(pairing_order_name({PairingOrderKind::SpeedDescending, 0}) == "speed-descending");
  CHECK(pairing_order_name({PairingOrderKind::SeededShuffle, 9}) == "seeded-shuffle(9)");
}

TEST_SUITE_END();
