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
#include <span>

#include "marsupial/metrics.hpp"

namespace marsupial {

// Renders the standard chart set from a run log:
//   pos_3d.svg      isometric projection of both vehicle paths
//   uav_pos.svg     UAV position per axis vs the commanded reference
//   ugv_pos.svg     UGV position per axis
//   uav_vel.svg     UAV velocity components
//   ugv_vel.svg     UGV velocity components
//   tether_len.svg  deployed length vs target vs vehicle separation
//   min_dist.svg    minimum obstacle clearance over time
// Charts are pure functions of the log, so regeneration is byte-identical.
void write_charts(const MetricsLog& log, std::span<const Obstacle> obstacles,
                  const std::filesystem::path& dir);

}  // namespace marsupial
