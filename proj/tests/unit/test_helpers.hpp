#pragma once

#include <vector>

#include "bdhd/instance.hpp"

namespace bdhd::testing {

// Two defenders on the unit interval: a fast one at the left end and a slow
// one at the right end, three attacks. The optimum intercepts all three
// (defender 1 takes events 2 and 3, defender 2 takes event 1).
inline Instance make_t1() {
  Instance inst;
  inst.space = BoundarySpace::interval();
  inst.defenders = {{1.0, Point::d1(0.0)}, {0.5, Point::d1(1.0)}};
  inst.events = {{Point::d1(0.9), 0.5}, {Point::d1(0.5), 0.6}, {Point::d1(0.1), 1.2}};
  return inst;
}

inline BoundarySpace space_by_index(int i) {
  switch (i % 4) {
    case 0: return BoundarySpace::interval();
    case 1: return BoundarySpace::circle(2.0);
    case 2: return BoundarySpace::square(1.0);
    default: return BoundarySpace::sphere(0.5);
  }
}

inline Instance random_instance(std::uint64_t seed, int n, int k,
                                double lambda = 3.0, double v_min = 0.5,
                                double v_max = 2.5) {
  GenerationConfig cfg;
  cfg.lambda = lambda;
  cfg.n_events = n;
  cfg.k_defenders = k;
  cfg.v_min = v_min;
  cfg.v_max = v_max;
  cfg.seed = seed;
  return generate_instance(space_by_index(static_cast<int>(seed)), cfg);
}

}  // namespace bdhd::testing
