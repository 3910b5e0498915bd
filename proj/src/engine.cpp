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

#include "marsupial/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "marsupial/errors.hpp"

namespace marsupial {

namespace {

constexpr double kDivergenceLimit = 1e6;

struct PinImpulses {
  Vec3 root{0.0, 0.0, 0.0};
  Vec3 tip{0.0, 0.0, 0.0};
};

// Contact radius: nodes adjacent to the anchors expose the larger joint
// sphere; interior nodes expose the cable section radius.
double contact_radius(const TetherState& s, const TetherParams& p, int i) {
  const int n = s.node_count();
  if (n > 2 && (i == 1 || i == n - 2)) return p.joint_radius;
  return p.node_radius;
}

std::vector<NodeContact> gather_contacts(const TetherState& s,
                                         const TetherParams& p,
                                         const std::vector<Obstacle>& obstacles) {
  std::vector<NodeContact> contacts;
  if (obstacles.empty()) return contacts;
  for (int i = 0; i < s.node_count(); ++i) {
    const double radius = contact_radius(s, p, i);
    for (const Obstacle& o : obstacles) {
      if (auto c = contact_query(s.positions[static_cast<std::size_t>(i)],
                                 radius, o)) {
        contacts.push_back(NodeContact{i, c->depth, c->normal,
                                       o.friction_coeff});
      }
    }
  }
  return contacts;
}

// One tether physics step with prescribed anchor motion. Reports the impulse
// each pin had to supply to keep its node on the prescribed trajectory.
void advance_tether(TetherState& tether, const TetherParams& params,
                    const SimParams& sim,
                    const std::vector<Obstacle>& obstacles,
                    const Vec3& root_pos, const Vec3& root_vel,
                    const Vec3& tip_pos, const Vec3& tip_vel,
                    PinImpulses* pins) {
  const int n = tether.node_count();
  if (n == 0) return;
  const double dt = sim.dt;
  const std::vector<double> masses = node_masses(tether, params);

  Vec3 root_dv = Vec3::Zero();
  Vec3 tip_dv = Vec3::Zero();
  if (tether.root_anchored) {
    root_dv = root_vel - tether.velocities.front();
    tether.positions.front() = root_pos;
    tether.velocities.front() = root_vel;
  }
  if (tether.tip_anchored && n > 1) {
    tip_dv = tip_vel - tether.velocities.back();
    tether.positions.back() = tip_pos;
    tether.velocities.back() = tip_vel;
  }

  const std::vector<NodeContact> contacts =
      gather_contacts(tether, params, obstacles);
  const ContactParams contact_params{sim.contact_stiffness,
                                     sim.contact_damping};
  const std::vector<Vec3> forces = accumulate_forces(
      tether, params, sim.gravity, contacts, contact_params);

  integrate_nodes(tether, forces, params, dt);

  ProjectionReactions reactions;
  if (params.inextensible) {
    project_inextensible(tether, params, sim.projection_iterations, dt,
                         &reactions);
  }

  if (pins != nullptr) {
    pins->root = Vec3::Zero();
    pins->tip = Vec3::Zero();
    if (tether.root_anchored) {
      pins->root = masses.front() * root_dv - dt * forces.front() -
                   reactions.root;
    }
    if (tether.tip_anchored && n > 1) {
      pins->tip = masses.back() * tip_dv - dt * forces.back() - reactions.tip;
    }
  }
}

bool magnitude_exceeded(const Vec3& v) {
  return !v.allFinite() || v.cwiseAbs().maxCoeff() > kDivergenceLimit;
}

void check_divergence(const WorldState& w) {
  bool bad = magnitude_exceeded(w.uav.position) ||
             magnitude_exceeded(w.uav.velocity) ||
             magnitude_exceeded(w.ugv.position) ||
             magnitude_exceeded(w.ugv.velocity);
  for (std::size_t i = 0; !bad && i < w.tether.positions.size(); ++i) {
    bad = magnitude_exceeded(w.tether.positions[i]) ||
          magnitude_exceeded(w.tether.velocities[i]);
  }
  if (bad) {
    throw DivergenceError(
        "state magnitude exceeded 1e6 at t=" + std::to_string(w.time) +
        " s; the parameter set is unstable");
  }
}

double max_penetration(const TetherState& s, const TetherParams& p,
                       const std::vector<Obstacle>& obstacles) {
  double worst = 0.0;
  for (int i = 0; i < s.node_count(); ++i) {
    const double radius = contact_radius(s, p, i);
    for (const Obstacle& o : obstacles) {
      const double d =
          signed_distance(s.positions[static_cast<std::size_t>(i)], o);
      worst = std::max(worst, radius - d);  // node sphere overlap
    }
  }
  return worst;
}

}  // namespace

WorldState build_world(const ScenarioConfig& config) {
  config.validate();

  WorldState w;
  w.params = config.sim;
  w.params.gravity = config.gravity;
  w.tether_params = config.tether;
  w.obstacles = config.obstacles;
  w.uav_gains = config.uav_gains;
  w.ugv_gains = config.ugv_gains;
  w.uav_attach_offset = config.uav_attach_offset;

  w.uav.kind = VehicleKind::kUav;
  w.uav.position = config.uav_start;
  w.uav.goal = config.uav_start;
  w.ugv.kind = VehicleKind::kUgv;
  w.ugv.position = config.ugv_start;
  w.ugv.goal = config.ugv_start;

  w.winch = WinchState::make(config.initial_deployed, config.reserve_length,
                             config.max_reel_rate, config.winch_exit_offset);
  w.tether = build_tether(config.tether, w.winch_exit(), w.uav_attach(),
                          config.initial_deployed);
  return w;
}

void step_world(WorldState& w) {
  const double dt = w.params.dt;

  // Controllers act on the coupling measured in the previous step.
  w.uav = uav_step(w.uav, w.uav_gains, w.tether_force_on_uav, dt);
  w.ugv = ugv_step(w.ugv, w.ugv_gains, dt);

  step_winch(w.winch, w.tether, w.tether_params, w.winch_exit(), dt);

  PinImpulses pins;
  advance_tether(w.tether, w.tether_params, w.params, w.obstacles,
                 w.winch_exit(), w.ugv.velocity, w.uav_attach(),
                 w.uav.velocity, &pins);

  w.tip_pin_impulse = pins.tip;
  w.root_pin_impulse = pins.root;
  w.tether_force_on_uav = -pins.tip / dt;
  w.tether_force_on_winch = -pins.root / dt;

  check_divergence(w);
  w.time += dt;
}

SettleResult settle_tether(TetherState& tether, const TetherParams& params,
                           const SimParams& sim, const Vec3& root,
                           const Vec3& tip,
                           const std::vector<Obstacle>& obstacles,
                           double max_sim_time, double ke_threshold) {
  SettleResult result;
  const Vec3 zero = Vec3::Zero();
  double t = 0.0;
  // Chains start at rest, so kinetic energy is only meaningful after the
  // initial transient develops.
  const double warmup = 0.5;
  while (t < max_sim_time) {
    advance_tether(tether, params, sim, obstacles, root, zero, tip, zero,
                   nullptr);
    t += sim.dt;
    if (t >= warmup) {
      const double ke = kinetic_energy(tether, params);
      if (ke < ke_threshold) {
        result.sim_time = t;
        result.kinetic_energy = ke;
        result.max_penetration = max_penetration(tether, params, obstacles);
        return result;
      }
    }
  }
  result.sim_time = t;
  result.kinetic_energy = kinetic_energy(tether, params);
  result.max_penetration = max_penetration(tether, params, obstacles);
  return result;
}

MetricsLog run_scenario(const ScenarioConfig& config) {
  WorldState w = build_world(config);
  TrackerState tracker(config.waypoints, config.mode, config.slack_factor);

  MetricsLog log;
  log.targets_total = tracker.waypoints().size();
  const int steps_per_sample = std::max(
      1, static_cast<int>(std::llround(1.0 / (config.log_rate * w.params.dt))));
  log.log_interval = w.params.dt * steps_per_sample;

  auto take_sample = [&](const TrackerState& tr) {
    MetricsSample s;
    s.t = w.time;
    s.uav_pos = w.uav.position;
    s.uav_vel = w.uav.velocity;
    s.uav_goal = w.uav.goal;
    s.ugv_pos = w.ugv.position;
    s.ugv_vel = w.ugv.velocity;
    s.deployed_length = w.winch.deployed_length;
    s.target_length = w.winch.target_length;
    s.tether_nodes = w.tether.positions;
    s.min_obstacle_dist = min_obstacle_distance(s, w.obstacles);
    s.target_index = tr.current_index();
    log.samples.push_back(std::move(s));
  };

  take_sample(tracker);

  long step_index = 0;
  while (true) {
    const TrackerState::Advance cmd = tracker.advance(
        w.uav.position, w.ugv.position, w.winch_exit(), w.time,
        w.winch.deployed_length);
    if (tracker.progress().complete) break;

    w.uav.goal = cmd.uav_goal;
    w.ugv.goal = cmd.ugv_goal;
    w.winch = command_target(w.winch, cmd.tether_target);

    if (w.time >= config.timeout) {
      const TrackerState::Progress p = tracker.progress();
      throw TimeoutError("scenario timed out after " +
                         std::to_string(w.time) + " s with " +
                         std::to_string(p.reached) + "/" +
                         std::to_string(p.total) + " targets reached");
    }

    step_world(w);
    ++step_index;
    if (step_index % steps_per_sample == 0) take_sample(tracker);
  }

  const TrackerState::Progress p = tracker.progress();
  log.targets_reached = p.reached;
  log.complete = p.complete;
  log.final_time = w.time;
  return log;
}

}  // namespace marsupial
