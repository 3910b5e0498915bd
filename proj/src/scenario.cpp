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

#include "marsupial/scenario.hpp"

#include <fstream>
#include <sstream>

#include "marsupial/errors.hpp"

namespace marsupial {

void SimParams::validate() const {
  if (!(dt > 0.0) || dt > 0.01) {
    throw InvalidParamsError("sim dt must be in (0, 0.01] s");
  }
  if (!(gravity > 0.0)) throw InvalidParamsError("gravity must be > 0");
  if (!(contact_stiffness > 0.0) || !(contact_damping >= 0.0) ||
      !(friction_coeff >= 0.0)) {
    throw InvalidParamsError("contact parameters must be non-negative");
  }
  if (projection_iterations < 1) {
    throw InvalidParamsError("projection_iterations must be >= 1");
  }
}

void ScenarioConfig::validate() const {
  if (!(gravity > 0.0)) throw InvalidParamsError("gravity must be > 0");
  tether.validate();
  sim.validate();
  uav_gains.validate();
  ugv_gains.validate();
  for (const Obstacle& o : obstacles) o.validate();
  if (initial_deployed < 0.0 || reserve_length < 0.0) {
    throw InvalidParamsError("winch lengths must be >= 0");
  }
  if (!(max_reel_rate > 0.0)) {
    throw InvalidParamsError("max_reel_rate must be > 0");
  }
  if (!(log_rate > 0.0)) throw InvalidParamsError("log_rate must be > 0");
  if (!(timeout > 0.0)) throw InvalidParamsError("timeout must be > 0");
  if (mode == TetherMode::kRtta && slack_factor < 1.0) {
    throw InvalidParamsError("slack_factor must be >= 1");
  }
}

namespace {

Vec3 get_vec3(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() ||
      !j[1].is_number() || !j[2].is_number()) {
    throw SchemaError("field '" + field + "' must be an array of 3 numbers");
  }
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

double get_num(const nlohmann::json& obj, const std::string& field,
               double fallback) {
  if (!obj.contains(field)) return fallback;
  if (!obj.at(field).is_number()) {
    throw SchemaError("field '" + field + "' must be a number");
  }
  return obj.at(field).get<double>();
}

Obstacle parse_obstacle(const nlohmann::json& j, std::size_t index,
                        double default_friction) {
  const std::string where = "obstacles[" + std::to_string(index) + "]";
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw SchemaError(where + ": missing string field 'type'");
  }
  const std::string type = j.at("type").get<std::string>();
  const double friction = get_num(j, "friction", default_friction);
  if (type == "sphere") {
    if (!j.contains("center") || !j.contains("radius")) {
      throw SchemaError(where + ": sphere requires 'center' and 'radius'");
    }
    return Obstacle::sphere(get_vec3(j.at("center"), where + ".center"),
                            get_num(j, "radius", 0.0), friction);
  }
  if (type == "box") {
    if (!j.contains("min") || !j.contains("max")) {
      throw SchemaError(where + ": box requires 'min' and 'max'");
    }
    return Obstacle::box(get_vec3(j.at("min"), where + ".min"),
                         get_vec3(j.at("max"), where + ".max"), friction);
  }
  throw SchemaError(where + ": unknown obstacle type '" + type + "'");
}

}  // namespace

ScenarioConfig parse_scenario(const nlohmann::json& doc,
                              const std::filesystem::path& base_dir) {
  if (!doc.is_object()) throw SchemaError("scenario document must be an object");

  ScenarioConfig cfg;

  if (doc.contains("world")) {
    const auto& w = doc.at("world");
    cfg.gravity = get_num(w, "gravity", cfg.gravity);
    if (w.contains("obstacles")) {
      const auto& obs = w.at("obstacles");
      if (!obs.is_array()) {
        throw SchemaError("world.obstacles must be an array");
      }
      double default_friction = cfg.sim.friction_coeff;
      if (doc.contains("sim")) {
        default_friction =
            get_num(doc.at("sim"), "friction", default_friction);
      }
      for (std::size_t i = 0; i < obs.size(); ++i) {
        cfg.obstacles.push_back(parse_obstacle(obs[i], i, default_friction));
      }
    }
  }

  if (doc.contains("tether")) {
    const auto& t = doc.at("tether");
    cfg.tether.element_length =
        get_num(t, "element_length", cfg.tether.element_length);
    cfg.tether.node_radius = get_num(t, "node_radius", cfg.tether.node_radius);
    cfg.tether.joint_radius =
        get_num(t, "joint_radius", cfg.tether.joint_radius);
    cfg.tether.element_mass =
        get_num(t, "element_mass", cfg.tether.element_mass);
    cfg.tether.damping = get_num(t, "damping", cfg.tether.damping);
    cfg.tether.spring_stiffness =
        get_num(t, "spring_stiffness", cfg.tether.spring_stiffness);
    if (t.contains("inextensible")) {
      if (!t.at("inextensible").is_boolean()) {
        throw SchemaError("tether.inextensible must be a boolean");
      }
      cfg.tether.inextensible = t.at("inextensible").get<bool>();
    }
  }

  if (doc.contains("winch")) {
    const auto& w = doc.at("winch");
    cfg.initial_deployed =
        get_num(w, "initial_deployed", cfg.initial_deployed);
    cfg.reserve_length = get_num(w, "reserve_length", cfg.reserve_length);
    cfg.max_reel_rate = get_num(w, "max_reel_rate", cfg.max_reel_rate);
    if (w.contains("exit_offset")) {
      cfg.winch_exit_offset = get_vec3(w.at("exit_offset"), "winch.exit_offset");
    }
  }

  auto parse_gains = [&](const nlohmann::json& v, ControllerGains& g,
                         Vec3& start) {
    g.kp = get_num(v, "kp", g.kp);
    g.kd = get_num(v, "kd", g.kd);
    g.max_speed = get_num(v, "max_speed", g.max_speed);
    g.max_accel = get_num(v, "max_accel", g.max_accel);
    g.uav_mass = get_num(v, "mass", g.uav_mass);
    if (v.contains("start")) start = get_vec3(v.at("start"), "start");
  };
  if (doc.contains("uav")) {
    parse_gains(doc.at("uav"), cfg.uav_gains, cfg.uav_start);
    if (doc.at("uav").contains("attach_offset")) {
      cfg.uav_attach_offset =
          get_vec3(doc.at("uav").at("attach_offset"), "uav.attach_offset");
    }
  }
  if (doc.contains("ugv")) parse_gains(doc.at("ugv"), cfg.ugv_gains, cfg.ugv_start);

  if (doc.contains("sim")) {
    const auto& s = doc.at("sim");
    cfg.sim.dt = get_num(s, "dt", cfg.sim.dt);
    cfg.sim.contact_stiffness =
        get_num(s, "contact_stiffness", cfg.sim.contact_stiffness);
    cfg.sim.contact_damping =
        get_num(s, "contact_damping", cfg.sim.contact_damping);
    cfg.sim.friction_coeff = get_num(s, "friction", cfg.sim.friction_coeff);
    cfg.sim.projection_iterations = static_cast<int>(get_num(
        s, "projection_iterations", cfg.sim.projection_iterations));
    cfg.sim.gravity = cfg.gravity;
  }
  cfg.sim.gravity = cfg.gravity;

  nlohmann::json trajectory;
  if (doc.contains("trajectory_file")) {
    if (!doc.at("trajectory_file").is_string()) {
      throw SchemaError("trajectory_file must be a string path");
    }
    const std::filesystem::path p =
        base_dir / doc.at("trajectory_file").get<std::string>();
    std::ifstream in(p);
    if (!in) throw ConfigError("trajectory file not found: " + p.string());
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      trajectory = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(p.string() + ": " + e.what());
    }
  } else if (doc.contains("trajectory")) {
    trajectory = doc.at("trajectory");
  } else {
    throw SchemaError("scenario requires 'trajectory' or 'trajectory_file'");
  }

  TrackerState tracker = make_tracker(trajectory);
  cfg.waypoints = tracker.waypoints();
  cfg.mode = tracker.mode();
  cfg.slack_factor = tracker.slack_factor();

  cfg.log_rate = get_num(doc, "log_rate", cfg.log_rate);
  cfg.timeout = get_num(doc, "timeout", cfg.timeout);

  cfg.validate();
  return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("scenario file not found: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return parse_scenario(doc, path.parent_path());
}

}  // namespace marsupial
