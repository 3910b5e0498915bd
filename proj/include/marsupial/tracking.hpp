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

#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "marsupial/spatial.hpp"

namespace marsupial {

struct Waypoint {
  Vec3 ugv_goal{0.0, 0.0, 0.0};
  Vec3 uav_goal{0.0, 0.0, 0.0};
  std::optional<double> tether_ref_length;  // m, required in PTR mode
  double arrival_tolerance = 0.15;          // m
};

enum class TetherMode { kRtta, kPtr };

// Waypoint sequencer. A waypoint counts as reached only when both vehicles
// are inside its tolerance, so the pair stays synchronized with the tether
// reference.
class TrackerState {
 public:
  TrackerState() = default;
  TrackerState(std::vector<Waypoint> waypoints, TetherMode mode,
               double slack_factor);

  const std::vector<Waypoint>& waypoints() const { return waypoints_; }
  std::size_t current_index() const { return current_index_; }
  TetherMode mode() const { return mode_; }
  double slack_factor() const { return slack_factor_; }
  const std::vector<double>& arrival_times() const { return arrival_times_; }

  // Replaces the not-yet-reached tail of the plan. May be called from any
  // thread; the request is applied at the start of the next advance().
  void inject_waypoints(std::vector<Waypoint> replacement);

  struct Advance {
    Vec3 ugv_goal{0.0, 0.0, 0.0};
    Vec3 uav_goal{0.0, 0.0, 0.0};
    double tether_target = 0.0;
    bool advanced = false;
  };

  // Checks arrival, advances at most one waypoint, and reports the goals and
  // tether reference for the coming step. In RTTA mode the reference is
  // slack_factor times the instantaneous UAV-to-exit distance; in PTR mode it
  // is the current waypoint's planned length.
  Advance advance(const Vec3& uav_pos, const Vec3& ugv_pos,
                  const Vec3& winch_exit, double time,
                  double current_deployed);

  struct Progress {
    std::size_t reached = 0;
    std::size_t total = 0;
    bool complete = false;
  };
  Progress progress() const;

 private:
  void drain_injection();

  std::vector<Waypoint> waypoints_;
  std::size_t current_index_ = 0;
  TetherMode mode_ = TetherMode::kRtta;
  double slack_factor_ = 1.05;
  std::vector<double> arrival_times_;

  std::mutex injection_mutex_;
  std::optional<std::vector<Waypoint>> pending_injection_;
};

// Parses the trajectory document. Schema: top-level "mode" (rtta|ptr),
// optional "slack_factor", and "waypoints", each with "ugv": [x,y,z],
// "uav": [x,y,z], optional "tether" and "tolerance". Throws ParseError or
// SchemaError naming the offending field.
std::vector<Waypoint> load_trajectory(const nlohmann::json& doc);
std::vector<Waypoint> load_trajectory_text(const std::string& text);

TrackerState make_tracker(const nlohmann::json& doc);

}  // namespace marsupial
