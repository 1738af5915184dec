#pragma once

#include <limits>
#include <vector>

#include <json.hpp>

#include "bdhd/edp.hpp"
#include "bdhd/geometry.hpp"
#include "bdhd/instance.hpp"

namespace bdhd {

struct HorizonParams {
  // Look-ahead window: event i becomes known at max(0, t_i - horizon).
  // Must be > 0; infinity = full knowledge at the start.
  double horizon = std::numeric_limits<double>::infinity();
};

struct SimulateOptions {
  std::vector<PairingOrder> orders;  // empty = defaults from instance seed
  EdpOptions edp;
  bool record_trajectories = false;
};

struct EventOutcome {
  double revealed_at = 0.0;
  int assigned_defender = -1;  // 0-based; -1 = nobody at event time
  bool intercepted = false;
};

struct TrajectorySample {
  double t = 0.0;
  Point loc;
};

struct SimulationReport {
  int intercepted_count = 0;
  double rate = 0.0;
  std::vector<EventOutcome> events;
  // One polyline per defender, sampled at every breakpoint; filled only when
  // SimulateOptions::record_trajectories is set.
  std::vector<std::vector<TrajectorySample>> trajectories;
};

nlohmann::json simulation_report_to_json(const SimulationReport& report);

// Indices (1-based, ascending) of events that become visible at `clock`:
// t_i <= clock + horizon and not flagged in `revealed` yet. Flags are set.
std::vector<int> reveal_events(const std::vector<AttackEvent>& events,
                               double clock, double horizon,
                               std::vector<bool>& revealed);

// Receding-horizon execution: defenders chase their current plan's next
// target at full speed and hold once there; every revelation triggers a
// fresh pairing-heuristic solve over the visible unexpired events from the
// defenders' present positions. An event scores iff its assigned defender
// stands within tolerance of its location at its exact time.
SimulationReport simulate_online(const Instance& inst,
                                 const HorizonParams& params,
                                 const SimulateOptions& opts = {});

}  // namespace bdhd
