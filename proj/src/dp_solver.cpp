#include "bdhd/dp_solver.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "bdhd/errors.hpp"

namespace bdhd {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

}  // namespace

InterceptionPlan solve_dp(const Instance& inst, const ReachabilityRelation& rel,
                          const DpOptions& opts) {
  const int n = inst.n();
  const int k = inst.k();
  const std::uint64_t base = static_cast<std::uint64_t>(n) + 1;
  const std::uint64_t entries = saturating_pow(base, k);
  if (entries > opts.max_table_entries) {
    throw StateSpaceTooLarge(entries, opts.max_table_entries);
  }
  if (n == 0) return InterceptionPlan::empty(k);

  // place[i] is the weight of digit i; digit 0 is the most significant.
  std::vector<std::uint64_t> place(k);
  place[k - 1] = 1;
  for (int i = k - 2; i >= 0; --i) place[i] = place[i + 1] * base;

  // value[s] = best interception count with each defender's last event fixed
  // by s's digits; -1 = unreachable. States with a repeated nonzero digit are
  // skipped (an event has at most one interceptor).
  std::vector<std::int32_t> value(entries, -1);
  value[0] = 0;

  std::int32_t best_val = 0;
  std::uint64_t best_state = 0;
  std::vector<int> digit(k, 0);

  // Incremental odometer bookkeeping: occ[e] = how many digits hold event e,
  // dups = number of events held twice or more, ma = first digit holding the
  // maximum. All O(1) amortized per state, so the transition loop dominates.
  std::vector<std::uint8_t> occ(base, 0);
  int dups = 0;
  auto take = [&](int e) {
    if (e != 0 && ++occ[static_cast<std::size_t>(e)] == 2) ++dups;
  };
  auto drop = [&](int e) {
    if (e != 0 && occ[static_cast<std::size_t>(e)]-- == 2) --dups;
  };

  int ma = k - 1;
  for (std::uint64_t s = 1; s < entries; ++s) {
    int pos = k - 1;
    while (digit[pos] == n) {
      drop(n);
      digit[pos--] = 0;
    }
    drop(digit[pos]);
    take(++digit[pos]);
    if (pos == k - 1) {
      // No carry: only the last digit grew; it displaces the max on strict >.
      if (ma == k - 1 || digit[pos] > digit[ma]) ma = pos;
    } else {  // carry (rare): rescan for the first maximal digit
      ma = 0;
      for (int i = 1; i < k; ++i) {
        if (digit[i] > digit[ma]) ma = i;
      }
    }
    if (dups != 0) continue;

    // Only the globally latest interception can be peeled off; its defender
    // previously sat at some p < a it could reach a from.
    const int a = digit[ma];
    const std::uint64_t weight = place[ma];
    std::int32_t val = -1;
    for (int p : rel.prev(a, ma)) {
      if (p >= a) break;  // ascending; same-time edges with p > a never chain
      if (occ[static_cast<std::size_t>(p)] != 0) continue;  // p < a, so never ma itself
      const std::int32_t prior =
          value[s - weight * static_cast<std::uint64_t>(a - p)];
      if (prior >= 0 && prior + 1 > val) val = prior + 1;
    }
    if (val < 0) continue;
    value[s] = val;
    if (val > best_val) {  // ascending s keeps the lowest encoding on ties
      best_val = val;
      best_state = s;
    }
  }

  InterceptionPlan plan = InterceptionPlan::empty(k);
  plan.intercepted_count = best_val;

  std::vector<int> cur(k);
  {
    std::uint64_t rem = best_state;
    for (int i = k - 1; i >= 0; --i) {
      cur[i] = static_cast<int>(rem % base);
      rem /= base;
    }
  }
  std::uint64_t s = best_state;
  while (s != 0) {
    int ma = 0;
    for (int i = 1; i < k; ++i) {
      if (cur[i] > cur[ma]) ma = i;
    }
    const int a = cur[ma];
    const std::int32_t target = value[s] - 1;
    int chosen = -1;
    std::uint64_t sp = 0;
    for (int p : rel.prev(a, ma)) {
      if (p >= a) break;
      if (p != 0) {
        bool clash = false;
        for (int j = 0; j < k; ++j) {
          if (j != ma && cur[j] == p) {
            clash = true;
            break;
          }
        }
        if (clash) continue;
      }
      const std::uint64_t cand =
          s - place[ma] * static_cast<std::uint64_t>(a - p);
      if (value[cand] == target) {  // ascending scan -> lowest p wins ties
        chosen = p;
        sp = cand;
        break;
      }
    }
    assert(chosen >= 0);
    plan.assignments[ma].push_back(a);
    cur[ma] = chosen;
    s = sp;
  }
  for (auto& seq : plan.assignments) std::reverse(seq.begin(), seq.end());
  return plan;
}

namespace detail {

PairDpResult solve_dp_pair(int n, const std::vector<std::vector<int>>& prev_a,
                           const std::vector<std::vector<int>>& prev_b) {
  const std::size_t base = static_cast<std::size_t>(n) + 1;
  std::vector<std::int32_t> value(base * base, -1);
  value[0] = 0;

  std::int32_t best_val = 0;
  std::size_t best_state = 0;

  for (std::size_t s = 1; s < value.size(); ++s) {
    const int a = static_cast<int>(s / base);
    const int b = static_cast<int>(s % base);
    if (a == b) continue;
    std::int32_t val = -1;
    if (a > b) {
      for (int p : prev_a[a]) {
        if (p == b && p != 0) continue;
        const std::int32_t prior = value[static_cast<std::size_t>(p) * base +
                                         static_cast<std::size_t>(b)];
        if (prior >= 0 && prior + 1 > val) val = prior + 1;
      }
    } else {
      for (int p : prev_b[b]) {
        if (p == a && p != 0) continue;
        const std::int32_t prior = value[static_cast<std::size_t>(a) * base +
                                         static_cast<std::size_t>(p)];
        if (prior >= 0 && prior + 1 > val) val = prior + 1;
      }
    }
    if (val < 0) continue;
    value[s] = val;
    if (val > best_val) {
      best_val = val;
      best_state = s;
    }
  }

  PairDpResult out;
  out.count = best_val;
  int a = static_cast<int>(best_state / base);
  int b = static_cast<int>(best_state % base);
  std::size_t s = best_state;
  while (s != 0) {
    const std::int32_t target = value[s] - 1;
    if (a > b) {
      int chosen = -1;
      for (int p : prev_a[a]) {
        if (p == b && p != 0) continue;
        const std::size_t cand =
            static_cast<std::size_t>(p) * base + static_cast<std::size_t>(b);
        if (value[cand] == target) {
          chosen = p;
          break;
        }
      }
      assert(chosen >= 0);
      out.seq[0].push_back(a);
      a = chosen;
    } else {
      int chosen = -1;
      for (int p : prev_b[b]) {
        if (p == a && p != 0) continue;
        const std::size_t cand =
            static_cast<std::size_t>(a) * base + static_cast<std::size_t>(p);
        if (value[cand] == target) {
          chosen = p;
          break;
        }
      }
      assert(chosen >= 0);
      out.seq[1].push_back(b);
      b = chosen;
    }
    s = static_cast<std::size_t>(a) * base + static_cast<std::size_t>(b);
  }
  std::reverse(out.seq[0].begin(), out.seq[0].end());
  std::reverse(out.seq[1].begin(), out.seq[1].end());
  return out;
}

}  // namespace detail

}  // namespace bdhd
