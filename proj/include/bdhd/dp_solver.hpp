#pragma once

#include <cstdint>
#include <vector>

#include "bdhd/instance.hpp"
#include "bdhd/plan.hpp"
#include "bdhd/reachability.hpp"

namespace bdhd {

struct DpOptions {
  // (n+1)^k table entries above this throw StateSpaceTooLarge.
  std::uint64_t max_table_entries = std::uint64_t{1} << 30;
};

// Exact dynamic programming over last-intercepted-event tuples. States are
// base-(n+1) numbers a_1..a_k (a_i = last event of defender i, 0 = initial
// location); exponential in k. Ties in argmax and among predecessors break
// toward the lowest encoding, so plans are reproducible.
InterceptionPlan solve_dp(const Instance& inst, const ReachabilityRelation& rel,
                          const DpOptions& opts = {});

namespace detail {

// 2-defender DP working directly on filtered prev lists (entries < a,
// ascending, 0 = initial location). Used by the pairing heuristic; indices
// are local 1..n.
struct PairDpResult {
  int count = 0;
  std::vector<int> seq[2];
};

PairDpResult solve_dp_pair(int n, const std::vector<std::vector<int>>& prev_a,
                           const std::vector<std::vector<int>>& prev_b);

}  // namespace detail

}  // namespace bdhd
