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

#include <json.hpp>

#include "marsupial/errors.hpp"
#include "marsupial/tracking.hpp"

using namespace marsupial;
using nlohmann::json;

namespace {

json simple_plan() {
  return json::parse(R"({
    "mode": "rtta",
    "slack_factor": 1.05,
    "waypoints": [
      {"ugv": [0, 0, 0.3], "uav": [0, 0, 2]},
      {"ugv": [1, 0, 0.3], "uav": [1, 0, 2], "tolerance": 0.2}
    ]
  })");
}

}  // namespace

TEST_CASE("empty waypoint list is a valid trajectory") {
  const json doc = json::parse(R"({"mode": "rtta", "waypoints": []})");
  CHECK(load_trajectory(doc).empty());
  TrackerState t = make_tracker(doc);
  CHECK(t.progress().complete);
}

TEST_CASE("waypoints load with defaults applied") {
  const auto wps = load_trajectory(simple_plan());
  REQUIRE(wps.size() == 2);
  CHECK(wps[0].arrival_tolerance == doctest::Approx(0.15));
  CHECK(wps[1].arrival_tolerance == doctest::Approx(0.2));
  CHECK(!wps[0].tether_ref_length.has_value());
  CHECK(wps[0].uav_goal == Vec3(0, 0, 2));
}

TEST_CASE("missing uav goal raises a schema error naming the field") {
  const json doc = json::parse(R"({"waypoints": [{"ugv": [0,0,0]}]})");
  try {
    load_trajectory(doc);
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("uav") != std::string::npos);
  }
}

TEST_CASE("malformed text raises a parse error") {
  CHECK_THROWS_AS(load_trajectory_text("{not json"), ParseError);
}

TEST_CASE("a hundred-waypoint plan loads completely") {
  json doc;
  doc["mode"] = "ptr";
  for (int i = 0; i < 100; ++i) {
    json wp;
    wp["ugv"] = {0.1 * i, 0.0, 0.3};
    wp["uav"] = {0.1 * i, 0.0, 2.0};
    wp["tether"] = 2.0 + 0.01 * i;
    doc["waypoints"].push_back(wp);
  }
  const auto wps = load_trajectory(doc);
  CHECK(wps.size() == 100);
  const TrackerState t = make_tracker(doc);
  CHECK(t.mode() == TetherMode::kPtr);
  CHECK(t.progress().total == 100);
}

TEST_CASE("ptr mode requires a tether length on every waypoint") {
  json doc = simple_plan();
  doc["mode"] = "ptr";
  CHECK_THROWS_AS(make_tracker(doc), SchemaError);
}

TEST_CASE("joint arrival gates advancement") {
  TrackerState t = make_tracker(simple_plan());
  const Vec3 exit(0, 0, 0.5);

  // Only the UAV in tolerance: no advance.
  auto r = t.advance(Vec3(0, 0, 2), Vec3(5, 0, 0.3), exit, 0.1, 2.0);
  CHECK(!r.advanced);
  CHECK(t.current_index() == 0);

  // Both in tolerance: advance by exactly one.
  r = t.advance(Vec3(0, 0, 2.1), Vec3(0.05, 0, 0.3), exit, 0.2, 2.0);
  CHECK(r.advanced);
  CHECK(t.current_index() == 1);
  CHECK(r.uav_goal == Vec3(1, 0, 2));

  // Arrival timestamps are recorded for reached waypoints.
  CHECK(t.arrival_times()[0] == doctest::Approx(0.2));
}

TEST_CASE("rtta reference follows the instantaneous distance") {
  TrackerState t = make_tracker(simple_plan());
  const Vec3 exit(0, 0, 0);
  const auto r = t.advance(Vec3(10, 0, 0), Vec3(9, 9, 9), exit, 0.0, 1.0);
  CHECK(r.tether_target == doctest::Approx(10.5));
}

TEST_CASE("ptr reference comes from the plan") {
  json doc = simple_plan();
  doc["mode"] = "ptr";
  doc["waypoints"][0]["tether"] = 3.5;
  doc["waypoints"][1]["tether"] = 4.5;
  TrackerState t = make_tracker(doc);
  const auto r = t.advance(Vec3(10, 0, 0), Vec3(9, 9, 9), Vec3(0, 0, 0),
                           0.0, 1.0);
  CHECK(r.tether_target == doctest::Approx(3.5));
}

TEST_CASE("progress counts stay consistent") {
  TrackerState t = make_tracker(simple_plan());
  CHECK(t.progress().reached == 0);
  CHECK(t.progress().total == 2);
  CHECK(!t.progress().complete);

  t.advance(Vec3(0, 0, 2), Vec3(0, 0, 0.3), Vec3(0, 0, 0.5), 0.1, 1.0);
  t.advance(Vec3(1, 0, 2), Vec3(1, 0, 0.3), Vec3(1, 0, 0.5), 0.2, 1.0);
  const auto p = t.progress();
  CHECK(p.reached == 2);
  CHECK(p.complete);
}

TEST_CASE("index never decreases and completion holds the last goal") {
  TrackerState t = make_tracker(simple_plan());
  std::size_t prev = 0;
  for (int i = 0; i < 10; ++i) {
    // Sit on whichever waypoint is current so the plan plays out.
    const Vec3 uav = (t.current_index() == 0) ? Vec3(0, 0, 2) : Vec3(1, 0, 2);
    const Vec3 ugv =
        (t.current_index() == 0) ? Vec3(0, 0, 0.3) : Vec3(1, 0, 0.3);
    t.advance(uav, ugv, Vec3(0, 0, 0.5), 0.1 * i, 1.0);
    CHECK(t.current_index() >= prev);
    prev = t.current_index();
  }
  CHECK(t.progress().complete);
  const auto r = t.advance(Vec3(1, 0, 2), Vec3(1, 0, 0.3), Vec3(1, 0, 0.5),
                           2.0, 1.0);
  CHECK(r.uav_goal == Vec3(1, 0, 2));  // holds the final waypoint
}

TEST_CASE("injection replaces the remaining plan at the next advance") {
  TrackerState t = make_tracker(simple_plan());

  std::vector<Waypoint> replacement(1);
  replacement[0].ugv_goal = Vec3(7, 0, 0.3);
  replacement[0].uav_goal = Vec3(7, 0, 2);
  t.inject_waypoints(replacement);

  const auto r = t.advance(Vec3(9, 9, 9), Vec3(9, 9, 0.3), Vec3(0, 0, 0.5),
                           0.0, 1.0);
  CHECK(r.uav_goal == Vec3(7, 0, 2));
  CHECK(t.progress().total == 1);
}
