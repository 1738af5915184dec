#include "bdhd/online.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "bdhd/plan.hpp"
#include "bdhd/reachability.hpp"

namespace bdhd {

nlohmann::json simulation_report_to_json(const SimulationReport& report) {
  nlohmann::json j;
  j["count"] = report.intercepted_count;
  j["n"] = report.events.size();
  j["rate"] = report.rate;
  nlohmann::json evs = nlohmann::json::array();
  for (const EventOutcome& o : report.events) {
    nlohmann::json e;
    e["revealed_at"] = o.revealed_at;
    if (o.assigned_defender >= 0) {
      e["assigned_defender"] = o.assigned_defender + 1;
    } else {
      e["assigned_defender"] = nullptr;
    }
    e["intercepted"] = o.intercepted;
    evs.push_back(std::move(e));
  }
  j["events"] = std::move(evs);
  if (!report.trajectories.empty()) {
    nlohmann::json trs = nlohmann::json::array();
    for (const auto& tr : report.trajectories) {
      nlohmann::json poly = nlohmann::json::array();
      for (const TrajectorySample& s : tr) {
        nlohmann::json pt;
        pt["t"] = s.t;
        nlohmann::json loc = nlohmann::json::array();
        for (int i = 0; i < s.loc.dim; ++i) loc.push_back(s.loc.c[i]);
        pt["loc"] = std::move(loc);
        poly.push_back(std::move(pt));
      }
      trs.push_back(std::move(poly));
    }
    j["trajectories"] = std::move(trs);
  }
  return j;
}

std::vector<int> reveal_events(const std::vector<AttackEvent>& events,
                               double clock, double horizon,
                               std::vector<bool>& revealed) {
  std::vector<int> fresh;
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (revealed[i]) continue;
    if (events[i].t <= clock + horizon) {
      revealed[i] = true;
      fresh.push_back(static_cast<int>(i) + 1);
    }
  }
  return fresh;
}

SimulationReport simulate_online(const Instance& inst,
                                 const HorizonParams& params,
                                 const SimulateOptions& opts) {
  if (!(params.horizon > 0.0)) {
    throw std::invalid_argument("horizon must be > 0");
  }
  const int n = inst.n();
  const int k = inst.k();
  const double T = params.horizon;

  SimulationReport report;
  report.events.resize(n);
  for (int i = 0; i < n; ++i) {
    report.events[i].revealed_at =
        std::isinf(T) ? 0.0 : std::max(0.0, inst.events[i].t - T);
  }
  if (opts.record_trajectories) {
    report.trajectories.resize(k);
    for (int d = 0; d < k; ++d) {
      report.trajectories[d].push_back({0.0, inst.defenders[d].initial_loc});
    }
  }
  if (n == 0) {
    report.rate = interception_rate(0, 0);
    return report;
  }

  std::vector<Point> pos(k);
  for (int d = 0; d < k; ++d) pos[d] = inst.defenders[d].initial_loc;

  std::vector<bool> revealed(n, false);
  std::vector<bool> done(n, false);
  std::vector<int> assigned(n + 1, -1);
  std::vector<std::deque<int>> queue(k);

  // Everything interesting happens at a revelation or an event time.
  std::vector<double> bps;
  bps.reserve(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    bps.push_back(report.events[i].revealed_at);
    bps.push_back(inst.events[i].t);
  }
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  const auto replan = [&](double clock) {
    Instance sub;
    sub.space = inst.space;
    sub.meta = inst.meta;
    sub.defenders.reserve(k);
    for (int d = 0; d < k; ++d) {
      sub.defenders.push_back({inst.defenders[d].speed, pos[d]});
    }
    std::vector<int> local_to_global;
    for (int i = 1; i <= n; ++i) {
      if (!revealed[i - 1] || done[i - 1]) continue;
      if (inst.events[i - 1].t < clock) continue;  // expired, drop
      sub.events.push_back(
          {inst.events[i - 1].loc, inst.events[i - 1].t - clock});
      local_to_global.push_back(i);
    }
    const ReachabilityRelation rel = build_relation(sub);
    const InterceptionPlan plan = solve_edp(sub, rel, opts.orders, opts.edp);

    std::fill(assigned.begin(), assigned.end(), -1);
    for (int d = 0; d < k; ++d) {
      queue[d].clear();
      for (int local : plan.assignments[d]) {
        const int g = local_to_global[local - 1];
        assigned[g] = d;
        queue[d].push_back(g);
      }
    }
  };

  double clock = 0.0;
  std::size_t cursor = 0;  // next event occurrence to process
  for (double bp : bps) {
    // Motion first: chase the head of the queue, hold when idle or arrived.
    const double dt = bp - clock;
    if (dt > 0.0) {
      for (int d = 0; d < k; ++d) {
        if (queue[d].empty()) continue;
        const Point& target = inst.events[queue[d].front() - 1].loc;
        pos[d] = move_toward(inst.space, pos[d], target,
                             inst.defenders[d].speed * dt);
      }
    }
    clock = bp;
    if (opts.record_trajectories) {
      for (int d = 0; d < k; ++d) {
        report.trajectories[d].push_back({clock, pos[d]});
      }
    }

    // Revelations next, so a zero-slack reveal can still be claimed...
    if (!reveal_events(inst.events, clock, T, revealed).empty()) {
      replan(clock);
    }

    // ...and occurrences last.
    while (cursor < static_cast<std::size_t>(n) &&
           inst.events[cursor].t == bp) {
      const int g = static_cast<int>(cursor) + 1;
      ++cursor;
      if (done[g - 1]) continue;
      done[g - 1] = true;
      EventOutcome& out = report.events[g - 1];
      out.assigned_defender = assigned[g];
      if (assigned[g] >= 0) {
        const int d = assigned[g];
        out.intercepted =
            geodesic_distance(inst.space, pos[d], inst.events[g - 1].loc) <=
            kEps;
        if (out.intercepted) ++report.intercepted_count;
        auto it = std::find(queue[d].begin(), queue[d].end(), g);
        if (it != queue[d].end()) queue[d].erase(it);
      }
    }
  }

  report.rate = interception_rate(report.intercepted_count, n);
  return report;
}

}  // namespace bdhd
