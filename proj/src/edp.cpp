#include "bdhd/edp.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "bdhd/dp_solver.hpp"
#include "bdhd/rng.hpp"

namespace bdhd {

namespace {

constexpr std::uint64_t kPairShuffleSalt = 0x70616972ull;

std::vector<std::pair<int, int>> ordered_pairs(const Instance& inst,
                                               const PairingOrder& order) {
  const int k = inst.k();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k - 1));
  auto push_lex = [&](const std::vector<int>& rank) {
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i != j) pairs.emplace_back(rank[i], rank[j]);
      }
    }
  };
  std::vector<int> rank(k);
  std::iota(rank.begin(), rank.end(), 0);
  switch (order.kind) {
    case PairingOrderKind::LexAscending:
      push_lex(rank);
      break;
    case PairingOrderKind::SpeedDescending:
      std::stable_sort(rank.begin(), rank.end(), [&](int a, int b) {
        return inst.defenders[a].speed > inst.defenders[b].speed;
      });
      push_lex(rank);
      break;
    case PairingOrderKind::SeededShuffle: {
      push_lex(rank);
      RandomSource rng = RandomSource::derive(order.seed, kPairShuffleSalt);
      for (std::size_t i = pairs.size(); i > 1; --i) {
        std::swap(pairs[i - 1], pairs[rng.bounded(i)]);
      }
      break;
    }
  }
  return pairs;
}

// One ordering's pass: mutates `assign` (event -> defender, -1 = nobody) and
// returns the final total. Sweeps repeat until no pair improves unless
// single_pass is set.
int run_ordering(const Instance& inst, const ReachabilityRelation& rel,
                 const std::vector<std::pair<int, int>>& pairs,
                 bool single_pass, std::vector<int>& assign) {
  const int n = inst.n();
  std::fill(assign.begin(), assign.end(), -1);
  int total = 0;

  std::vector<int> gmap(n + 1, 0);  // global event -> 1-based slot in E'
  std::vector<int> members;
  members.reserve(n);
  std::vector<std::vector<int>> prev_u;
  std::vector<std::vector<int>> prev_v;

  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto& [u, v] : pairs) {
      members.clear();
      int pair_count = 0;
      for (int e = 1; e <= n; ++e) {
        const int owner = assign[e];
        if (owner == -1 || owner == u || owner == v) {
          members.push_back(e);
          if (owner != -1) ++pair_count;
        }
      }
      const int m = static_cast<int>(members.size());
      if (m == 0 || pair_count == m) continue;  // already saturated

      for (int a = 1; a <= m; ++a) gmap[members[a - 1]] = a;
      prev_u.assign(m + 1, {});
      prev_v.assign(m + 1, {});
      for (int a = 1; a <= m; ++a) {
        const int g = members[a - 1];
        for (int p : rel.prev(g, u)) {
          if (p == 0) {
            prev_u[a].push_back(0);
          } else if (const int lp = gmap[p]; lp != 0 && lp < a) {
            prev_u[a].push_back(lp);
          }
        }
        for (int p : rel.prev(g, v)) {
          if (p == 0) {
            prev_v[a].push_back(0);
          } else if (const int lp = gmap[p]; lp != 0 && lp < a) {
            prev_v[a].push_back(lp);
          }
        }
      }

      const auto sub = detail::solve_dp_pair(m, prev_u, prev_v);
      if (sub.count > pair_count) {
        for (int e = 1; e <= n; ++e) {
          if (assign[e] == u || assign[e] == v) assign[e] = -1;
        }
        for (int a : sub.seq[0]) assign[members[a - 1]] = u;
        for (int a : sub.seq[1]) assign[members[a - 1]] = v;
        total += sub.count - pair_count;
        improved = true;
      }
      for (int g : members) gmap[g] = 0;
    }
    if (single_pass) break;
  }
  return total;
}

InterceptionPlan plan_from_assign(int n, int k, const std::vector<int>& assign,
                                  int total) {
  InterceptionPlan plan = InterceptionPlan::empty(k);
  plan.intercepted_count = total;
  for (int e = 1; e <= n; ++e) {
    if (assign[e] != -1) plan.assignments[assign[e]].push_back(e);
  }
  return plan;
}

}  // namespace

std::string pairing_order_name(const PairingOrder& order) {
  switch (order.kind) {
    case PairingOrderKind::LexAscending:
      return "lex-ascending";
    case PairingOrderKind::SpeedDescending:
      return "speed-descending";
    case PairingOrderKind::SeededShuffle:
      return "seeded-shuffle(" + std::to_string(order.seed) + ")";
  }
  return "?";
}

std::vector<PairingOrder> default_pairing_orders(std::uint64_t seed) {
  return {{PairingOrderKind::LexAscending, 0},
          {PairingOrderKind::SpeedDescending, 0},
          {PairingOrderKind::SeededShuffle, seed}};
}

EdpResult solve_edp_detailed(const Instance& inst,
                             const ReachabilityRelation& rel,
                             const std::vector<PairingOrder>& orders,
                             const EdpOptions& opts) {
  const int n = inst.n();
  const int k = inst.k();

  std::vector<PairingOrder> fallback;
  const std::vector<PairingOrder>* use = &orders;
  if (orders.empty()) {
    const std::uint64_t seed =
        inst.meta.seed ? static_cast<std::uint64_t>(*inst.meta.seed) : 0;
    fallback = default_pairing_orders(seed);
    use = &fallback;
  }

  EdpResult best;
  best.plan = InterceptionPlan::empty(k);
  best.winning_order = use->front();
  if (k == 0 || n == 0) return best;

  if (k == 1) {
    std::vector<std::vector<int>> prev_u(n + 1);
    std::vector<std::vector<int>> prev_v(n + 1);
    for (int a = 1; a <= n; ++a) {
      for (int p : rel.prev(a, 0)) {
        if (p < a) prev_u[a].push_back(p);
      }
    }
    const auto sub = detail::solve_dp_pair(n, prev_u, prev_v);
    best.plan.assignments[0] = sub.seq[0];
    best.plan.intercepted_count = sub.count;
    return best;
  }

  std::vector<int> assign(n + 1, -1);
  for (const PairingOrder& order : *use) {
    const auto pairs = ordered_pairs(inst, order);
    const int total = run_ordering(inst, rel, pairs, opts.single_pass, assign);
    if (total > best.plan.intercepted_count) {
      best.plan = plan_from_assign(n, k, assign, total);
      best.winning_order = order;
    }
  }
  return best;
}

InterceptionPlan solve_edp(const Instance& inst, const ReachabilityRelation& rel,
                           const std::vector<PairingOrder>& orders,
                           const EdpOptions& opts) {
  return solve_edp_detailed(inst, rel, orders, opts).plan;
}

InterceptionPlan solve_edp(const Instance& inst, const ReachabilityRelation& rel,
                           const EdpOptions& opts) {
  return solve_edp_detailed(inst, rel, {}, opts).plan;
}

}  // namespace bdhd
