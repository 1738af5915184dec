#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bdhd/instance.hpp"
#include "bdhd/plan.hpp"
#include "bdhd/reachability.hpp"

namespace bdhd {

enum class PairingOrderKind { LexAscending, SpeedDescending, SeededShuffle };

struct PairingOrder {
  PairingOrderKind kind = PairingOrderKind::LexAscending;
  std::uint64_t seed = 0;  // SeededShuffle only

  bool operator==(const PairingOrder&) const = default;
};

std::string pairing_order_name(const PairingOrder& order);

// The stock trio: lexicographic, fastest-defenders-first, and a
// seed-derived shuffle of the pair list.
std::vector<PairingOrder> default_pairing_orders(std::uint64_t seed);

struct EdpOptions {
  // Stop each ordering after one sweep instead of iterating to a fixed
  // point. Fixed-point mode only ever adds strict improvements.
  bool single_pass = false;
};

struct EdpResult {
  InterceptionPlan plan;
  PairingOrder winning_order;
};

// Pairing heuristic: per ordering, every ordered defender pair (u, v) is
// re-optimized exactly with the 2-defender DP over the events currently
// held by u, v, or nobody; the pair's new plan is adopted only if it
// strictly raises the count. Best ordering wins; empty `orders` falls back
// to the defaults seeded from inst.meta.seed.
EdpResult solve_edp_detailed(const Instance& inst,
                             const ReachabilityRelation& rel,
                             const std::vector<PairingOrder>& orders,
                             const EdpOptions& opts = {});

InterceptionPlan solve_edp(const Instance& inst,
                           const ReachabilityRelation& rel,
                           const std::vector<PairingOrder>& orders,
                           const EdpOptions& opts = {});

InterceptionPlan solve_edp(const Instance& inst,
                           const ReachabilityRelation& rel,
                           const EdpOptions& opts = {});

}  // namespace bdhd
