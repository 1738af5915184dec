#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bdhd/geometry.hpp"
#include "bdhd/rng.hpp"

namespace bdhd {

// Instantaneous point attack on the boundary at time `t`.
struct AttackEvent {
  Point loc;
  double t = 0.0;

  bool operator==(const AttackEvent&) const = default;
};

struct DefenderSpec {
  double speed = 1.0;
  Point initial_loc;

  bool operator==(const DefenderSpec&) const = default;
};

struct InstanceMeta {
  std::optional<std::int64_t> seed;
  std::optional<double> lambda;

  bool operator==(const InstanceMeta&) const = default;
};

// Full problem instance. Events are sorted by time ascending, ties stable.
struct Instance {
  BoundarySpace space;
  std::vector<DefenderSpec> defenders;
  std::vector<AttackEvent> events;
  InstanceMeta meta;

  int n() const { return static_cast<int>(events.size()); }
  int k() const { return static_cast<int>(defenders.size()); }

  bool operator==(const Instance&) const = default;
};

struct GenerationConfig {
  double lambda = 1.0;       // attack rate of the Poisson process
  int n_events = 0;
  int k_defenders = 1;
  double v_min = 1.0;
  double v_max = 1.0;
  std::optional<double> speed_sum_target;  // rescale speeds to this sum
  std::uint64_t seed = 0;
};

// `n_events` events with Exponential(lambda) inter-arrival gaps and uniform
// locations; all gaps are drawn before any location so attack streams match
// across topologies for a fixed seed.
std::vector<AttackEvent> generate_poisson_attacks(const BoundarySpace& space,
                                                  const GenerationConfig& cfg,
                                                  RandomSource& rng);

// k speeds uniform on [v_min, v_max], rescaled to sum to speed_sum_target
// when set (ratios preserved).
std::vector<double> sample_defender_speeds(const GenerationConfig& cfg,
                                           RandomSource& rng);

// Events + speeds + uniform-random initial locations, each from a stream
// derived from cfg.seed. Seed and lambda are recorded in the meta block.
Instance generate_instance(const BoundarySpace& space, const GenerationConfig& cfg);

// Throws ParseError naming the offending field.
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

}  // namespace bdhd
