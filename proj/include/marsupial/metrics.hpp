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
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "marsupial/spatial.hpp"

namespace marsupial {

struct MetricsSample {
  double t = 0.0;
  Vec3 uav_pos{0.0, 0.0, 0.0};
  Vec3 uav_vel{0.0, 0.0, 0.0};
  Vec3 uav_goal{0.0, 0.0, 0.0};
  Vec3 ugv_pos{0.0, 0.0, 0.0};
  Vec3 ugv_vel{0.0, 0.0, 0.0};
  double deployed_length = 0.0;
  double target_length = 0.0;
  std::vector<Vec3> tether_nodes;
  double min_obstacle_dist = 0.0;
  std::size_t target_index = 0;
};

struct MetricsLog {
  std::vector<MetricsSample> samples;
  double log_interval = 0.01;  // s between samples
  double final_time = 0.0;     // world time when the run ended
  std::size_t targets_total = 0;
  std::size_t targets_reached = 0;
  bool complete = false;
};

struct MetricsSummary {
  double sim_time = 0.0;
  std::size_t targets = 0;
  double dist_ugv = 0.0;
  double dist_uav = 0.0;
  double tether_released = 0.0;
  double tether_collected = 0.0;
  double cat_error = 0.0;  // mean %, over non-degenerate samples
  double min_dist = 0.0;
  std::size_t cat_error_skipped = 0;  // taut/degenerate samples not scored
};

// Sum of successive Euclidean chords; 0 for fewer than 2 points.
double path_distance(std::span<const Vec3> points);

// Sum of positive increments of the length series, summed left to right.
double tether_released(std::span<const double> lengths);

// Sum of negative increments of the length series, summed left to right.
double tether_collected(std::span<const double> lengths);

// Smallest distance from the tether nodes and both vehicles to any obstacle;
// +infinity when there are no obstacles.
double min_obstacle_distance(const MetricsSample& sample,
                             std::span<const Obstacle> obstacles);

// Throws SimError("empty log") when the log has no samples.
MetricsSummary summarize(const MetricsLog& log,
                         std::span<const Obstacle> obstacles);

// Writes uav.csv, ugv.csv, tether.csv, and summary.csv into dir.
// Headers:
//   uav.csv     t,ux,uy,uz,uvx,uvy,uvz,gx,gy,gz,target_idx
//   ugv.csv     t,gx_,gy_,gz_,gvx,gvy,gvz,deployed,target_len
//   tether.csv  t,node_idx,x,y,z
//   summary.csv sim_time,targets,dist_ugv,dist_uav,tether_released,
//               tether_collected,cat_error,min_dist,cat_error_skipped
// Numbers are written in shortest round-trip form, so a parse returns the
// exact stored doubles.
void write_csv(const MetricsLog& log, const MetricsSummary& summary,
               const std::filesystem::path& dir);

// Rebuilds a log from the three CSV files. Per-sample obstacle distances are
// recomputed from the given obstacle set.
MetricsLog read_csv_log(const std::filesystem::path& dir,
                        std::span<const Obstacle> obstacles);

std::string format_double(double value);

}  // namespace marsupial
