#pragma once

#include <vector>

#include "bdhd/instance.hpp"

namespace bdhd {

// True iff a defender at `from_loc` at time `from_t` moving at `speed` can be
// at the event's location by its time: dist <= speed * dt + kEps.
bool can_reach(const BoundarySpace& space, const Point& from_loc, double from_t,
               const AttackEvent& event, double speed);

// Per-defender next/prev adjacency over events. Events are 1-based, index 0
// is the defender's initial location. next(a,d) and prev(a,d) are exact
// mirrors; entries are ascending.
class ReachabilityRelation {
 public:
  ReachabilityRelation() = default;

  int n() const { return n_; }
  int k() const { return k_; }

  // a in [0, n], defender d in [0, k)
  const std::vector<int>& next(int a, int d) const { return next_[idx(a, d)]; }
  // a in [1, n]; may contain 0 for the initial location
  const std::vector<int>& prev(int a, int d) const { return prev_[idx(a, d)]; }

  std::size_t edge_pair_count() const;

  friend ReachabilityRelation build_relation(const Instance& inst);

 private:
  std::size_t idx(int a, int d) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(k_) +
           static_cast<std::size_t>(d);
  }

  int n_ = 0;
  int k_ = 0;
  std::vector<std::vector<int>> next_;  // (n+1) x k
  std::vector<std::vector<int>> prev_;  // (n+1) x k, row 0 unused
};

ReachabilityRelation build_relation(const Instance& inst);

}  // namespace bdhd
