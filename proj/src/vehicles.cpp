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

#include "marsupial/vehicles.hpp"

#include <stdexcept>

#include "marsupial/errors.hpp"

namespace marsupial {

void ControllerGains::validate() const {
  if (!(kp > 0.0) || !(kd > 0.0) || !(max_speed > 0.0) || !(max_accel > 0.0) ||
      !(uav_mass > 0.0)) {
    throw InvalidParamsError("controller gains must all be > 0");
  }
}

VehicleState uav_step(VehicleState v, const ControllerGains& g,
                      const Vec3& tether_tension, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("uav_step requires dt > 0");

  const Vec3 pd = g.kp * (v.goal - v.position) - g.kd * v.velocity;
  const Vec3 accel = clamp_norm(pd, g.max_accel) + tether_tension / g.uav_mass;

  v.velocity = clamp_norm(v.velocity + dt * accel, g.max_speed);
  v.position += dt * v.velocity;
  return v;
}

VehicleState ugv_step(VehicleState v, const ControllerGains& g, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("ugv_step requires dt > 0");

  Vec3 to_goal = v.goal - v.position;
  to_goal.z() = 0.0;  // chassis height is fixed
  v.velocity = clamp_norm(g.kp * to_goal, g.max_speed);
  v.velocity.z() = 0.0;
  v.position += dt * v.velocity;
  return v;
}

}  // namespace marsupial
