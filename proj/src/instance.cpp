#include "bdhd/instance.hpp"

#include <algorithm>
#include <fstream>

#include "bdhd/errors.hpp"

namespace bdhd {

namespace {
// Salts for the independent substreams of one instance seed.
constexpr std::uint64_t kEventSalt = 0x6576656e74ull;
constexpr std::uint64_t kSpeedSalt = 0x7370656564ull;
constexpr std::uint64_t kPlacementSalt = 0x706c616365ull;
}  // namespace

std::vector<AttackEvent> generate_poisson_attacks(const BoundarySpace& space,
                                                  const GenerationConfig& cfg,
                                                  RandomSource& rng) {
  std::vector<AttackEvent> events(static_cast<std::size_t>(cfg.n_events));
  double t = 0.0;
  for (auto& e : events) {
    t += rng.exponential(cfg.lambda);
    e.t = t;
  }
  for (auto& e : events) e.loc = sample_uniform(space, rng);
  return events;
}

std::vector<double> sample_defender_speeds(const GenerationConfig& cfg,
                                           RandomSource& rng) {
  std::vector<double> speeds(static_cast<std::size_t>(cfg.k_defenders));
  double sum = 0.0;
  for (auto& v : speeds) {
    v = rng.uniform(cfg.v_min, cfg.v_max);
    sum += v;
  }
  if (cfg.speed_sum_target) {
    const double scale = *cfg.speed_sum_target / sum;
    for (auto& v : speeds) v *= scale;
  }
  return speeds;
}

Instance generate_instance(const BoundarySpace& space, const GenerationConfig& cfg) {
  Instance inst;
  inst.space = space;
  RandomSource ev_rng = RandomSource::derive(cfg.seed, kEventSalt);
  inst.events = generate_poisson_attacks(space, cfg, ev_rng);
  RandomSource sp_rng = RandomSource::derive(cfg.seed, kSpeedSalt);
  const auto speeds = sample_defender_speeds(cfg, sp_rng);
  RandomSource loc_rng = RandomSource::derive(cfg.seed, kPlacementSalt);
  inst.defenders.reserve(speeds.size());
  for (double v : speeds) inst.defenders.push_back({v, sample_uniform(space, loc_rng)});
  inst.meta.seed = static_cast<std::int64_t>(cfg.seed);
  inst.meta.lambda = cfg.lambda;
  return inst;
}

namespace {

nlohmann::json point_to_json(const Point& p) {
  nlohmann::json a = nlohmann::json::array();
  for (int i = 0; i < p.dim; ++i) a.push_back(p.c[i]);
  return a;
}

Point point_from_json(const nlohmann::json& j, const BoundarySpace& space,
                      const std::string& field) {
  if (!j.is_array() || j.size() < 1 || j.size() > 3)
    throw ParseError(field, "expected an array of 1-3 reals");
  Point p;
  p.dim = static_cast<int>(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number())
      throw ParseError(field + "[" + std::to_string(i) + "]", "expected a real");
    p.c[i] = j[i].get<double>();
  }
  try {
    validate_point(space, p);
  } catch (const InvalidPointError& e) {
    throw ParseError(field, e.what());
  }
  return p;
}

const nlohmann::json& require(const nlohmann::json& j, const char* key,
                              const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + key, "missing field");
  return *it;
}

}  // namespace

Instance instance_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("(root)", "expected a JSON object");
  Instance inst;

  const auto& jspace = require(j, "space", "");
  const auto& jkind = require(jspace, "kind", "space.");
  if (!jkind.is_string()) throw ParseError("space.kind", "expected a string");
  Topology kind;
  try {
    kind = topology_from_name(jkind.get<std::string>());
  } catch (const InvalidPointError& e) {
    throw ParseError("space.kind", e.what());
  }
  if (kind == Topology::Interval) {
    inst.space = BoundarySpace::interval();
  } else {
    const auto& jsize = require(jspace, "size", "space.");
    if (!jsize.is_number()) throw ParseError("space.size", "expected a real");
    const double size = jsize.get<double>();
    if (!(size > 0)) throw ParseError("space.size", "must be > 0");
    inst.space = {kind, size};
  }

  const auto& jdef = require(j, "defenders", "");
  if (!jdef.is_array() || jdef.empty())
    throw ParseError("defenders", "expected a non-empty array");
  for (std::size_t i = 0; i < jdef.size(); ++i) {
    const std::string path = "defenders[" + std::to_string(i) + "]";
    const auto& d = jdef[i];
    if (!d.is_object()) throw ParseError(path, "expected an object");
    const auto& jspeed = require(d, "speed", path + ".");
    if (!jspeed.is_number()) throw ParseError(path + ".speed", "expected a real");
    const double speed = jspeed.get<double>();
    if (!(speed > 0)) throw ParseError(path + ".speed", "must be > 0");
    const Point loc =
        point_from_json(require(d, "loc", path + "."), inst.space, path + ".loc");
    inst.defenders.push_back({speed, loc});
  }

  const auto& jev = require(j, "events", "");
  if (!jev.is_array()) throw ParseError("events", "expected an array");
  double prev_t = 0.0;
  for (std::size_t i = 0; i < jev.size(); ++i) {
    const std::string path = "events[" + std::to_string(i) + "]";
    const auto& e = jev[i];
    if (!e.is_object()) throw ParseError(path, "expected an object");
    const auto& jt = require(e, "t", path + ".");
    if (!jt.is_number()) throw ParseError(path + ".t", "expected a real");
    const double t = jt.get<double>();
    if (!(t >= 0)) throw ParseError(path + ".t", "must be >= 0");
    if (t < prev_t) throw ParseError(path + ".t", "events must be sorted by time");
    prev_t = t;
    const Point loc =
        point_from_json(require(e, "loc", path + "."), inst.space, path + ".loc");
    inst.events.push_back({loc, t});
  }

  if (auto it = j.find("meta"); it != j.end()) {
    if (!it->is_object()) throw ParseError("meta", "expected an object");
    if (auto s = it->find("seed"); s != it->end()) {
      if (!s->is_number_integer()) throw ParseError("meta.seed", "expected an integer");
      inst.meta.seed = s->get<std::int64_t>();
    }
    if (auto l = it->find("lambda"); l != it->end()) {
      if (!l->is_number()) throw ParseError("meta.lambda", "expected a real");
      inst.meta.lambda = l->get<double>();
    }
  }
  return inst;
}

nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json j;
  j["space"]["kind"] = topology_name(inst.space.kind);
  if (inst.space.kind != Topology::Interval) j["space"]["size"] = inst.space.size;
  j["defenders"] = nlohmann::json::array();
  for (const auto& d : inst.defenders)
    j["defenders"].push_back({{"speed", d.speed}, {"loc", point_to_json(d.initial_loc)}});
  j["events"] = nlohmann::json::array();
  for (const auto& e : inst.events)
    j["events"].push_back({{"loc", point_to_json(e.loc)}, {"t", e.t}});
  nlohmann::json meta = nlohmann::json::object();
  if (inst.meta.seed) meta["seed"] = *inst.meta.seed;
  if (inst.meta.lambda) meta["lambda"] = *inst.meta.lambda;
  j["meta"] = meta;
  return j;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("(file)", "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("(json)", e.what());
  }
  return instance_from_json(j);
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << instance_to_json(inst).dump(2) << '\n';
}

}  // namespace bdhd
