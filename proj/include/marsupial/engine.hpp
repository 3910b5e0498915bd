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

#include <vector>

#include "marsupial/metrics.hpp"
#include "marsupial/scenario.hpp"
#include "marsupial/tether.hpp"
#include "marsupial/tracking.hpp"
#include "marsupial/vehicles.hpp"
#include "marsupial/winch.hpp"

namespace marsupial {

// Full simulation state. One world is owned by one stepping thread; values
// are plain data and may be handed between threads between steps.
struct WorldState {
  double time = 0.0;
  VehicleState uav;
  VehicleState ugv;
  ControllerGains uav_gains;
  ControllerGains ugv_gains;
  WinchState winch;
  TetherState tether;
  TetherParams tether_params;
  std::vector<Obstacle> obstacles;
  SimParams params;
  Vec3 uav_attach_offset{0.0, 0.0, 0.0};

  // Tether coupling measured on the previous step. The force applied to the
  // UAV is exactly minus the pin impulse divided by dt.
  Vec3 tether_force_on_uav{0.0, 0.0, 0.0};
  Vec3 tether_force_on_winch{0.0, 0.0, 0.0};
  Vec3 tip_pin_impulse{0.0, 0.0, 0.0};
  Vec3 root_pin_impulse{0.0, 0.0, 0.0};

  Vec3 winch_exit() const { return ugv.position + winch.exit_offset; }
  Vec3 uav_attach() const { return uav.position + uav_attach_offset; }
};

WorldState build_world(const ScenarioConfig& config);

// Advances the world by exactly params.dt. Sub-step order: controllers,
// winch, anchor update, contacts, tether forces, integration, length
// projection, coupling measurement. Throws DivergenceError when any state
// magnitude exceeds 1e6.
void step_world(WorldState& w);

struct SettleResult {
  double sim_time = 0.0;
  double kinetic_energy = 0.0;
  double max_penetration = 0.0;  // deepest node-obstacle overlap at the end
};

// Relaxes a tether between two fixed anchor points until the total kinetic
// energy drops below ke_threshold (or max_sim_time passes). Runs the same
// force/integration/projection path as step_world.
SettleResult settle_tether(TetherState& tether, const TetherParams& params,
                           const SimParams& sim, const Vec3& root,
                           const Vec3& tip,
                           const std::vector<Obstacle>& obstacles,
                           double max_sim_time, double ke_threshold);

// Runs a configured scenario to completion and returns the sampled log.
// Throws TimeoutError when the trajectory does not finish in time.
MetricsLog run_scenario(const ScenarioConfig& config);

}  // namespace marsupial
