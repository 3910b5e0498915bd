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

#include "marsupial/winch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "marsupial/errors.hpp"

namespace marsupial {

WinchState WinchState::make(double deployed, double reserve, double max_rate,
                            const Vec3& exit_offset) {
  if (deployed < 0.0 || reserve < 0.0) {
    throw InvalidParamsError("winch lengths must be >= 0");
  }
  if (!(max_rate > 0.0)) {
    throw InvalidParamsError("winch max_reel_rate must be > 0");
  }
  WinchState w;
  w.deployed_length = deployed;
  w.reserve_length = reserve;
  w.total_material = deployed + reserve;
  w.target_length = deployed;
  w.max_reel_rate = max_rate;
  w.exit_offset = exit_offset;
  return w;
}

WinchState command_target(WinchState w, double target) {
  if (target < 0.0) {
    throw std::invalid_argument("winch target must be >= 0");
  }
  w.target_length = std::min(target, w.total_material);
  return w;
}

WinchStepResult step_winch(WinchState& w, TetherState& tether,
                           const TetherParams& params, const Vec3& exit_point,
                           double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("step_winch requires dt > 0");

  WinchStepResult result;

  const double gap = w.target_length - w.deployed_length;
  const double step = std::clamp(gap, -w.max_reel_rate * dt,
                                 w.max_reel_rate * dt);
  double deployed = std::clamp(w.deployed_length + step, 0.0,
                               w.total_material);
  w.deployed_length = deployed;
  w.reserve_length = w.total_material - deployed;

  const int target_segs = segment_count_for(deployed, params.element_length);

  // Absorb: the node nearest the exit disappears into the drum.
  while (tether.segment_count() > target_segs) {
    tether.positions.erase(tether.positions.begin() + 1);
    tether.velocities.erase(tether.velocities.begin() + 1);
    tether.rest_lengths.erase(tether.rest_lengths.begin());
    ++result.absorbed;
  }

  // Spawn: fresh material emerges at the exit as a new fractional segment.
  while (tether.segment_count() < target_segs) {
    Vec3 dir(0.0, 0.0, -1.0);
    if (tether.node_count() >= 2) {
      const Vec3 d = tether.positions[1] - tether.positions[0];
      const double n = d.norm();
      if (n > 1e-9) dir = d / n;
    }
    const double frac =
        deployed -
        params.element_length * static_cast<double>(tether.segment_count());
    const double offset = std::clamp(frac, 1e-6, params.element_length);
    const Vec3 vel =
        tether.velocities.empty() ? Vec3::Zero() : tether.velocities[0];
    tether.positions.insert(tether.positions.begin() + 1,
                            exit_point + offset * dir);
    tether.velocities.insert(tether.velocities.begin() + 1, vel);
    tether.rest_lengths.insert(tether.rest_lengths.begin(),
                               params.element_length);
    ++result.spawned;
  }

  // Root segment absorbs the fractional remainder; the rest stay full.
  if (target_segs > 0) {
    for (int i = 1; i < target_segs; ++i) {
      tether.rest_lengths[static_cast<std::size_t>(i)] = params.element_length;
    }
    tether.rest_lengths[0] =
        deployed -
        params.element_length * static_cast<double>(target_segs - 1);
  }
  return result;
}

double rtta_target(const Vec3& uav_pos, const Vec3& winch_exit,
                   double slack_factor) {
  if (slack_factor < 1.0) {
    throw std::invalid_argument("slack_factor must be >= 1");
  }
  return slack_factor * (uav_pos - winch_exit).norm();
}

}  // namespace marsupial
