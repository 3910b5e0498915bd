// Copyright 2026 The Marsupial Sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include <json.hpp>

#include "marsupial/errors.hpp"
#include "marsupial/scenario.hpp"

using namespace marsupial;
using nlohmann::json;

namespace {

json minimal_doc() {
  return json::parse(R"({
    "trajectory": {"mode": "rtta", "waypoints": []}
  })");
}

}  // namespace

TEST_CASE("defaults fill a minimal scenario") {
  const ScenarioConfig cfg = parse_scenario(minimal_doc());
  CHECK(cfg.gravity == doctest::Approx(9.81));
  CHECK(cfg.tether.element_length == doctest::Approx(0.05));
  CHECK(cfg.tether.element_mass == doctest::Approx(0.01));
  CHECK(cfg.tether.damping == doctest::Approx(0.05));
  CHECK(cfg.tether.spring_stiffness == doctest::Approx(0.01));
  CHECK(cfg.tether.node_radius == doctest::Approx(0.004));
  CHECK(cfg.tether.joint_radius == doctest::Approx(0.009));
  CHECK(cfg.reserve_length == doctest::Approx(18.45));
  CHECK(cfg.sim.dt == doctest::Approx(1e-3));
  CHECK(cfg.sim.contact_stiffness == doctest::Approx(1000.0));
  CHECK(cfg.sim.contact_damping == doctest::Approx(10.0));
  CHECK(cfg.sim.friction_coeff == doctest::Approx(0.5));
  CHECK(cfg.log_rate == doctest::Approx(100.0));
}

TEST_CASE("full document round trips into the config") {
  json doc = minimal_doc();
  doc["world"]["gravity"] = 9.8;
  doc["world"]["obstacles"] = json::array(
      {json{{"type", "sphere"}, {"center", {1, 2, 3}}, {"radius", 0.5}},
       json{{"type", "box"}, {"min", {0, 0, 0}}, {"max", {1, 1, 1}},
            {"friction", 0.8}}});
  doc["tether"]["element_length"] = 0.1;
  doc["winch"]["initial_deployed"] = 1.0;
  doc["winch"]["max_reel_rate"] = 2.0;
  doc["winch"]["exit_offset"] = {0.25, 0.0, 0.2};
  doc["uav"]["start"] = {0.0, 0.0, 2.0};
  doc["uav"]["kp"] = 60.0;
  doc["ugv"]["start"] = {0.0, 0.0, 0.3};
  doc["sim"]["dt"] = 0.002;
  doc["timeout"] = 30.0;

  const ScenarioConfig cfg = parse_scenario(doc);
  CHECK(cfg.obstacles.size() == 2);
  CHECK(cfg.obstacles[1].friction_coeff == doctest::Approx(0.8));
  CHECK(cfg.tether.element_length == doctest::Approx(0.1));
  CHECK(cfg.initial_deployed == doctest::Approx(1.0));
  CHECK(cfg.max_reel_rate == doctest::Approx(2.0));
  CHECK(cfg.winch_exit_offset == Vec3(0.25, 0, 0.2));
  CHECK(cfg.uav_gains.kp == doctest::Approx(60.0));
  CHECK(cfg.sim.dt == doctest::Approx(0.002));
  CHECK(cfg.timeout == doctest::Approx(30.0));
}

TEST_CASE("schema violations name the offending field") {
  json doc = minimal_doc();
  doc["world"]["obstacles"] = json::array({json{{"type", "sphere"}}});
  try {
    parse_scenario(doc);
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("sphere") != std::string::npos);
  }

  json bad_dt = minimal_doc();
  bad_dt["sim"]["dt"] = 0.5;  // above the fixed-step ceiling
  CHECK_THROWS_AS(parse_scenario(bad_dt), InvalidParamsError);

  json no_traj = json::object();
  CHECK_THROWS_AS(parse_scenario(no_traj), SchemaError);
}

TEST_CASE("element length above the winch limit is rejected") {
  json doc = minimal_doc();
  doc["tether"]["element_length"] = 0.25;
  CHECK_THROWS_AS(parse_scenario(doc), InvalidParamsError);
}

TEST_CASE("shipped scenario files load and validate") {
  const std::filesystem::path dir = MARSUPIAL_SCENARIO_DIR;
  for (const char* name :
       {"scenario1.json", "scenario2.json", "scenario3.json",
        "two_pillars.json"}) {
    const ScenarioConfig cfg = load_scenario(dir / name);
    CHECK(!cfg.waypoints.empty());
    CHECK(cfg.timeout <= 60.0);
  }
}

TEST_CASE("missing files are reported as config errors") {
  CHECK_THROWS_AS(load_scenario("definitely_not_here.json"), ConfigError);
}
