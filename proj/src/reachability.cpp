#include "bdhd/reachability.hpp"

namespace bdhd {

bool can_reach(const BoundarySpace& space, const Point& from_loc, double from_t,
               const AttackEvent& event, double speed) {
  if (event.t < from_t) return false;
  return geodesic_distance(space, from_loc, event.loc) <=
         speed * (event.t - from_t) + kEps;
}

std::size_t ReachabilityRelation::edge_pair_count() const {
  std::size_t m = 0;
  for (const auto& row : next_) m += row.size();
  return m;
}

ReachabilityRelation build_relation(const Instance& inst) {
  ReachabilityRelation rel;
  rel.n_ = inst.n();
  rel.k_ = inst.k();
  const std::size_t rows = static_cast<std::size_t>(rel.n_ + 1) * rel.k_;
  rel.next_.resize(rows);
  rel.prev_.resize(rows);

  for (int d = 0; d < rel.k_; ++d) {
    const auto& def = inst.defenders[d];
    for (int b = 1; b <= rel.n_; ++b)
      if (can_reach(inst.space, def.initial_loc, 0.0, inst.events[b - 1], def.speed)) {
        rel.next_[rel.idx(0, d)].push_back(b);
        rel.prev_[rel.idx(b, d)].push_back(0);
      }
    for (int a = 1; a <= rel.n_; ++a) {
      const auto& ea = inst.events[a - 1];
      for (int b = 1; b <= rel.n_; ++b) {
        if (b == a) continue;
        const auto& eb = inst.events[b - 1];
        if (eb.t < ea.t) continue;
        if (can_reach(inst.space, ea.loc, ea.t, eb, def.speed))
          rel.next_[rel.idx(a, d)].push_back(b);
      }
    }
    // mirror: iterate sources ascending so prev rows stay sorted
    for (int a = 1; a <= rel.n_; ++a)
      for (int b : rel.next_[rel.idx(a, d)]) rel.prev_[rel.idx(b, d)].push_back(a);
  }
  return rel;
}

}  // namespace bdhd
