#include <cmath>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "bdhd/errors.hpp"
#include "bdhd/instance.hpp"
#include "test_helpers.hpp"

using namespace bdhd;
using nlohmann::json;

TEST_SUITE_BEGIN("instance");

static GenerationConfig cfg_of(int n, int k, double lambda, std::uint64_t seed) {
  GenerationConfig cfg;
  cfg.lambda = lambda;
  cfg.n_events = n;
  cfg.k_defenders = k;
  cfg.v_min = 1.0;
  cfg.v_max = 4.0;
  cfg.seed = seed;
  return cfg;
}

TEST_CASE("generation is deterministic per seed") {
  const auto sp = BoundarySpace::circle(6.0);
  const Instance a = generate_instance(sp, cfg_of(30, 4, 2.0, 9));
  const Instance b = generate_instance(sp, cfg_of(30, 4, 2.0, 9));
  const Instance c = generate_instance(sp, cfg_of(30, 4, 2.0, 10));
  CHECK(a == b);
  CHECK(a != c);
  CHECK(instance_to_json(a).dump() == instance_to_json(b).dump());
}

TEST_CASE("generated instances are well-formed") {
  for (int i = 0; i < 4; ++i) {
    const auto sp = testing::space_by_index(i);
    const Instance inst = generate_instance(sp, cfg_of(40, 3, 5.0, 100 + i));
    REQUIRE(inst.n() == 40);
    REQUIRE(inst.k() == 3);
    CHECK(inst.meta.seed == 100 + i);
    CHECK(inst.meta.lambda == 5.0);
    for (const auto& d : inst.defenders) {
      CHECK(d.speed >= 1.0);
      CHECK(d.speed <= 4.0);
      CHECK_NOTHROW(validate_point(sp, d.initial_loc));
    }
    double prev_t = 0.0;
    for (const auto& e : inst.events) {
      CHECK(e.t > prev_t);  // exponential gaps are strictly positive
      prev_t = e.t;
      CHECK_NOTHROW(validate_point(sp, e.loc));
    }
  }
}

TEST_CASE("poisson gaps have the configured mean") {
  const auto sp = BoundarySpace::circle(1.0);
  const Instance inst = generate_instance(sp, cfg_of(4000, 1, 4.0, 77));
  const double mean_gap = inst.events.back().t / inst.n();
  CHECK(mean_gap == doctest::Approx(0.25).epsilon(0.05));
}

TEST_CASE("speed normalization hits the target sum and keeps ratios") {
  GenerationConfig cfg = cfg_of(5, 6, 1.0, 3);
  const Instance raw = generate_instance(BoundarySpace::interval(), cfg);
  cfg.speed_sum_target = 15.0;
  const Instance scaled = generate_instance(BoundarySpace::interval(), cfg);
  double sum = 0.0;
  for (const auto& d : scaled.defenders) sum += d.speed;
  CHECK(sum == doctest::Approx(15.0).epsilon(1e-12));
  const double factor = scaled.defenders[0].speed / raw.defenders[0].speed;
  for (int d = 1; d < 6; ++d)
    CHECK(scaled.defenders[d].speed / raw.defenders[d].speed ==
          doctest::Approx(factor).epsilon(1e-12));
  // Same seed, same event stream: normalization only touches speeds.
  CHECK(raw.events == scaled.events);
}

TEST_CASE("zero events and v_min == v_max are valid configurations") {
  GenerationConfig cfg = cfg_of(0, 2, 1.0, 5);
  cfg.v_min = cfg.v_max = 2.0;
  const Instance inst = generate_instance(BoundarySpace::interval(), cfg);
  CHECK(inst.n() == 0);
  CHECK(inst.defenders[0].speed == doctest::Approx(2.0));
  CHECK(inst.defenders[1].speed == doctest::Approx(2.0));
}

TEST_CASE("json round trip preserves the instance") {
  for (int i = 0; i < 4; ++i) {
    const Instance inst =
        generate_instance(testing::space_by_index(i), cfg_of(12, 3, 2.0, 50 + i));
    const Instance back = instance_from_json(instance_to_json(inst));
    CHECK(back == inst);
  }
}

TEST_CASE("interval instances omit the size field") {
  const json j = instance_to_json(testing::make_t1());
  CHECK(j["space"]["kind"] == "interval");
  CHECK(!j["space"].contains("size"));
  const json jc = instance_to_json(
      generate_instance(BoundarySpace::circle(2.0), cfg_of(1, 1, 1.0, 1)));
  CHECK(jc["space"]["size"] == doctest::Approx(2.0));
}

TEST_CASE("parse errors carry the offending field path") {
  json good = instance_to_json(testing::make_t1());

  auto field_of = [](const json& j) {
    try {
      instance_from_json(j);
    } catch (const ParseError& e) {
      return e.field;
    }
    return std::string("(no error)");
  };

  json j = good;
  j.erase("space");
  CHECK(field_of(j) == "space");

  j = good;
  j["space"]["kind"] = "torus";
  CHECK(field_of(j) == "space.kind");

  j = good;
  j["events"][1]["loc"] = json::array({0.1, 0.2});
  CHECK(field_of(j) == "events[1].loc");

  j = good;
  j["events"][0].erase("t");
  CHECK(field_of(j) == "events[0].t");

  j = good;
  j["defenders"][1]["speed"] = -2.0;
  CHECK(field_of(j) == "defenders[1].speed");

  j = good;
  j["defenders"][0]["loc"] = json::array({5.0});
  CHECK(field_of(j) == "defenders[0].loc");
}

TEST_CASE("events must come in non-decreasing time order") {
  json j = instance_to_json(testing::make_t1());
  std::swap(j["events"][0], j["events"][2]);
  CHECK_THROWS_AS(instance_from_json(j), ParseError);
}

TEST_CASE("save and load round trip through a file") {
  const Instance inst =
      generate_instance(BoundarySpace::sphere(1.0), cfg_of(8, 2, 3.0, 21));
  const std::string path = "/tmp/bdhd_test_instance.json";
  save_instance(inst, path);
  CHECK(load_instance(path) == inst);
}

TEST_SUITE_END();
