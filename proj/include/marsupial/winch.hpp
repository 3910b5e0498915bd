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
#include "marsupial/tether.hpp"

namespace marsupial {

// Reel state. Deployed and reserve lengths always sum to total_material;
// reserve is derived so the sum cannot drift.
struct WinchState {
  double deployed_length = 0.5;   // m, hanging material
  double reserve_length = 18.45;  // m, still on the drum
  double total_material = 18.95;  // m, constant
  double target_length = 0.5;     // m, commanded
  double max_reel_rate = 0.5;     // m/s
  Vec3 exit_offset{0.0, 0.0, 0.0};  // winch exit point in the carrier frame

  static WinchState make(double deployed, double reserve, double max_rate,
                         const Vec3& exit_offset = Vec3::Zero());
};

// Stores the target clamped to the available material; the length itself
// only changes through step_winch. A negative target is rejected.
WinchState command_target(WinchState w, double target);

struct WinchStepResult {
  int spawned = 0;   // nodes added at the exit
  int absorbed = 0;  // nodes removed at the exit
};

// Moves the deployed length toward the target by at most max_reel_rate*dt,
// grows or shrinks the root segment accordingly, and spawns/absorbs chain
// nodes at the exit point so that the node count always matches
// segment_count_for(deployed, element) + 1.
WinchStepResult step_winch(WinchState& w, TetherState& tether,
                           const TetherParams& params, const Vec3& exit_point,
                           double dt);

// Slack-proportional reference length: slack_factor * |uav - winch exit|.
double rtta_target(const Vec3& uav_pos, const Vec3& winch_exit,
                   double slack_factor);

}  // namespace marsupial
