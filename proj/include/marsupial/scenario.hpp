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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "marsupial/tether.hpp"
#include "marsupial/tracking.hpp"
#include "marsupial/vehicles.hpp"
#include "marsupial/winch.hpp"

namespace marsupial {

// Engine-side constants a physics backend normally supplies implicitly.
struct SimParams {
  double dt = 1e-3;                  // s, in (0, 0.01]
  double gravity = 9.81;             // m/s^2
  double contact_stiffness = 1000.0;  // N/m
  double contact_damping = 10.0;      // N*s/m
  double friction_coeff = 0.5;        // default obstacle friction
  int projection_iterations = 30;

  void validate() const;  // throws InvalidParamsError
};

// Everything a run needs, loaded from one JSON document. See the README for
// the schema; trajectory can be inline or referenced by file path.
struct ScenarioConfig {
  double gravity = 9.81;
  std::vector<Obstacle> obstacles;

  TetherParams tether;
  double initial_deployed = 0.5;   // m
  double reserve_length = 18.45;   // m, 123 coiled elements of 0.15 m
  double max_reel_rate = 0.5;      // m/s
  Vec3 winch_exit_offset{0.0, 0.0, 0.0};
  Vec3 uav_attach_offset{0.0, 0.0, 0.0};

  ControllerGains uav_gains;
  ControllerGains ugv_gains;
  Vec3 uav_start{0.0, 0.0, 1.0};
  Vec3 ugv_start{0.0, 0.0, 0.3};

  SimParams sim;

  TetherMode mode = TetherMode::kRtta;
  double slack_factor = 1.05;
  std::vector<Waypoint> waypoints;

  double log_rate = 100.0;  // Hz of simulated time
  double timeout = 120.0;   // s of simulated time

  void validate() const;
};

ScenarioConfig parse_scenario(const nlohmann::json& doc,
                              const std::filesystem::path& base_dir = {});
ScenarioConfig load_scenario(const std::filesystem::path& path);

}  // namespace marsupial
