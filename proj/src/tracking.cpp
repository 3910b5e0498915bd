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

#include "marsupial/tracking.hpp"

#include <limits>
#include <utility>

#include "marsupial/errors.hpp"
#include "marsupial/winch.hpp"

namespace marsupial {

namespace {

Vec3 parse_vec3(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() ||
      !j[1].is_number() || !j[2].is_number()) {
    throw SchemaError("field '" + field + "' must be an array of 3 numbers");
  }
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

Waypoint parse_waypoint(const nlohmann::json& j, std::size_t index) {
  const std::string where = "waypoints[" + std::to_string(index) + "]";
  if (!j.is_object()) {
    throw SchemaError(where + " must be an object");
  }
  Waypoint wp;
  if (!j.contains("ugv")) {
    throw SchemaError(where + ": missing required field 'ugv'");
  }
  if (!j.contains("uav")) {
    throw SchemaError(where + ": missing required field 'uav'");
  }
  wp.ugv_goal = parse_vec3(j.at("ugv"), where + ".ugv");
  wp.uav_goal = parse_vec3(j.at("uav"), where + ".uav");
  if (j.contains("tether")) {
    if (!j.at("tether").is_number()) {
      throw SchemaError(where + ".tether must be a number");
    }
    const double t = j.at("tether").get<double>();
    if (t < 0.0) throw SchemaError(where + ".tether must be >= 0");
    wp.tether_ref_length = t;
  }
  if (j.contains("tolerance")) {
    if (!j.at("tolerance").is_number()) {
      throw SchemaError(where + ".tolerance must be a number");
    }
    wp.arrival_tolerance = j.at("tolerance").get<double>();
    if (!(wp.arrival_tolerance > 0.0)) {
      throw SchemaError(where + ".tolerance must be > 0");
    }
  }
  return wp;
}

}  // namespace

TrackerState::TrackerState(std::vector<Waypoint> waypoints, TetherMode mode,
                           double slack_factor)
    : waypoints_(std::move(waypoints)),
      mode_(mode),
      slack_factor_(slack_factor) {
  if (mode_ == TetherMode::kPtr) {
    for (std::size_t i = 0; i < waypoints_.size(); ++i) {
      if (!waypoints_[i].tether_ref_length.has_value()) {
        throw SchemaError("waypoints[" + std::to_string(i) +
                          "]: PTR mode requires field 'tether'");
      }
    }
  }
  if (mode_ == TetherMode::kRtta && slack_factor_ < 1.0) {
    throw SchemaError("slack_factor must be >= 1");
  }
  arrival_times_.assign(waypoints_.size(),
                        std::numeric_limits<double>::quiet_NaN());
}

void TrackerState::inject_waypoints(std::vector<Waypoint> replacement) {
  if (mode_ == TetherMode::kPtr) {
    for (std::size_t i = 0; i < replacement.size(); ++i) {
      if (!replacement[i].tether_ref_length.has_value()) {
        throw SchemaError("injected waypoints[" + std::to_string(i) +
                          "]: PTR mode requires field 'tether'");
      }
    }
  }
  const std::lock_guard<std::mutex> lock(injection_mutex_);
  pending_injection_ = std::move(replacement);
}

void TrackerState::drain_injection() {
  std::optional<std::vector<Waypoint>> pending;
  {
    const std::lock_guard<std::mutex> lock(injection_mutex_);
    pending.swap(pending_injection_);
  }
  if (!pending.has_value()) return;

  waypoints_.resize(current_index_);
  waypoints_.insert(waypoints_.end(), pending->begin(), pending->end());
  arrival_times_.resize(waypoints_.size(),
                        std::numeric_limits<double>::quiet_NaN());
}

TrackerState::Advance TrackerState::advance(const Vec3& uav_pos,
                                            const Vec3& ugv_pos,
                                            const Vec3& winch_exit,
                                            double time,
                                            double current_deployed) {
  drain_injection();

  Advance out;
  if (current_index_ < waypoints_.size()) {
    const Waypoint& wp = waypoints_[current_index_];
    const bool uav_in = (uav_pos - wp.uav_goal).norm() <= wp.arrival_tolerance;
    const bool ugv_in = (ugv_pos - wp.ugv_goal).norm() <= wp.arrival_tolerance;
    if (uav_in && ugv_in) {
      arrival_times_[current_index_] = time;
      ++current_index_;
      out.advanced = true;
    }
  }

  if (current_index_ < waypoints_.size()) {
    const Waypoint& wp = waypoints_[current_index_];
    out.ugv_goal = wp.ugv_goal;
    out.uav_goal = wp.uav_goal;
    out.tether_target = (mode_ == TetherMode::kPtr)
                            ? wp.tether_ref_length.value()
                            : rtta_target(uav_pos, winch_exit, slack_factor_);
  } else if (!waypoints_.empty()) {
    // Plan finished: hold the last waypoint.
    const Waypoint& wp = waypoints_.back();
    out.ugv_goal = wp.ugv_goal;
    out.uav_goal = wp.uav_goal;
    out.tether_target = (mode_ == TetherMode::kPtr)
                            ? wp.tether_ref_length.value()
                            : rtta_target(uav_pos, winch_exit, slack_factor_);
  } else {
    out.ugv_goal = ugv_pos;
    out.uav_goal = uav_pos;
    out.tether_target = current_deployed;
  }
  return out;
}

TrackerState::Progress TrackerState::progress() const {
  Progress p;
  p.total = waypoints_.size();
  p.reached = current_index_;
  p.complete = (current_index_ >= waypoints_.size());
  return p;
}

std::vector<Waypoint> load_trajectory(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw SchemaError("trajectory document must be an object");
  }
  if (!doc.contains("waypoints")) {
    throw SchemaError("trajectory: missing required field 'waypoints'");
  }
  const auto& wps = doc.at("waypoints");
  if (!wps.is_array()) {
    throw SchemaError("trajectory field 'waypoints' must be an array");
  }
  std::vector<Waypoint> out;
  out.reserve(wps.size());
  for (std::size_t i = 0; i < wps.size(); ++i) {
    out.push_back(parse_waypoint(wps[i], i));
  }
  return out;
}

std::vector<Waypoint> load_trajectory_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("trajectory: ") + e.what());
  }
  return load_trajectory(doc);
}

TrackerState make_tracker(const nlohmann::json& doc) {
  std::vector<Waypoint> wps = load_trajectory(doc);

  TetherMode mode = TetherMode::kRtta;
  if (doc.contains("mode")) {
    const auto& m = doc.at("mode");
    if (!m.is_string()) throw SchemaError("trajectory 'mode' must be a string");
    const std::string text = m.get<std::string>();
    if (text == "rtta") {
      mode = TetherMode::kRtta;
    } else if (text == "ptr") {
      mode = TetherMode::kPtr;
    } else {
      throw SchemaError("trajectory 'mode' must be 'rtta' or 'ptr', got '" +
                        text + "'");
    }
  }

  double slack = 1.05;
  if (doc.contains("slack_factor")) {
    if (!doc.at("slack_factor").is_number()) {
      throw SchemaError("trajectory 'slack_factor' must be a number");
    }
    slack = doc.at("slack_factor").get<double>();
  }
  return TrackerState(std::move(wps), mode, slack);
}

}  // namespace marsupial
