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

#include "marsupial/spatial.hpp"

namespace marsupial {

enum class VehicleKind { kUav, kUgv };

struct VehicleState {
  Vec3 position{0.0, 0.0, 0.0};
  Vec3 velocity{0.0, 0.0, 0.0};
  Vec3 goal{0.0, 0.0, 0.0};
  VehicleKind kind = VehicleKind::kUav;
};

struct ControllerGains {
  double kp = 4.0;         // 1/s^2 for the UAV PD law, 1/s for the UGV
  double kd = 4.0;         // 1/s
  double max_speed = 1.0;  // m/s
  double max_accel = 4.0;  // m/s^2
  double uav_mass = 1.5;   // kg

  void validate() const;  // throws InvalidParamsError
};

// Gravity-compensated point-mass PD step. Tether tension enters as a
// disturbance force; hover thrust cancels weight.
VehicleState uav_step(VehicleState v, const ControllerGains& g,
                      const Vec3& tether_tension, double dt);

// Holonomic kinematic step in the ground plane; z never changes.
VehicleState ugv_step(VehicleState v, const ControllerGains& g, double dt);

}  // namespace marsupial
