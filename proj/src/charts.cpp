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

#include "marsupial/charts.hpp"

#include <cmath>

#include "marsupial/svg_plot.hpp"

namespace marsupial {

namespace {

// Isometric screen projection for the 3D path chart.
void project_iso(const Vec3& p, double& u, double& v) {
  const double c = std::cos(M_PI / 6.0);
  const double s = std::sin(M_PI / 6.0);
  u = (p.x() - p.y()) * c;
  v = p.z() + (p.x() + p.y()) * s * 0.5;
}

}  // namespace

void write_charts(const MetricsLog& log, std::span<const Obstacle> obstacles,
                  const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const std::size_t n = log.samples.size();

  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = log.samples[i].t;

  auto axis = [&](auto getter) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = getter(log.samples[i]);
    return v;
  };

  {
    SvgPlot plot("3D paths (isometric)", "u [m]", "v [m]");
    std::vector<double> xu(n), xv(n), gu(n), gv(n);
    for (std::size_t i = 0; i < n; ++i) {
      project_iso(log.samples[i].uav_pos, xu[i], xv[i]);
      project_iso(log.samples[i].ugv_pos, gu[i], gv[i]);
    }
    plot.add_series("uav", xu, xv);
    plot.add_series("ugv", gu, gv);
    plot.write(dir / "pos_3d.svg");
  }
  {
    SvgPlot plot("UAV position vs reference", "t [s]", "position [m]");
    plot.add_series("x", t, axis([](const MetricsSample& s) { return s.uav_pos.x(); }));
    plot.add_series("y", t, axis([](const MetricsSample& s) { return s.uav_pos.y(); }));
    plot.add_series("z", t, axis([](const MetricsSample& s) { return s.uav_pos.z(); }));
    plot.add_series("ref x", t, axis([](const MetricsSample& s) { return s.uav_goal.x(); }));
    plot.add_series("ref y", t, axis([](const MetricsSample& s) { return s.uav_goal.y(); }));
    plot.add_series("ref z", t, axis([](const MetricsSample& s) { return s.uav_goal.z(); }));
    plot.write(dir / "uav_pos.svg");
  }
  {
    SvgPlot plot("UGV position", "t [s]", "position [m]");
    plot.add_series("x", t, axis([](const MetricsSample& s) { return s.ugv_pos.x(); }));
    plot.add_series("y", t, axis([](const MetricsSample& s) { return s.ugv_pos.y(); }));
    plot.add_series("z", t, axis([](const MetricsSample& s) { return s.ugv_pos.z(); }));
    plot.write(dir / "ugv_pos.svg");
  }
  {
    SvgPlot plot("UAV velocity", "t [s]", "velocity [m/s]");
    plot.add_series("vx", t, axis([](const MetricsSample& s) { return s.uav_vel.x(); }));
    plot.add_series("vy", t, axis([](const MetricsSample& s) { return s.uav_vel.y(); }));
    plot.add_series("vz", t, axis([](const MetricsSample& s) { return s.uav_vel.z(); }));
    plot.write(dir / "uav_vel.svg");
  }
  {
    SvgPlot plot("UGV velocity", "t [s]", "velocity [m/s]");
    plot.add_series("vx", t, axis([](const MetricsSample& s) { return s.ugv_vel.x(); }));
    plot.add_series("vy", t, axis([](const MetricsSample& s) { return s.ugv_vel.y(); }));
    plot.add_series("vz", t, axis([](const MetricsSample& s) { return s.ugv_vel.z(); }));
    plot.write(dir / "ugv_vel.svg");
  }
  {
    SvgPlot plot("Tether length", "t [s]", "length [m]");
    plot.add_series("deployed", t, axis([](const MetricsSample& s) {
                      return s.deployed_length;
                    }));
    plot.add_series("target", t, axis([](const MetricsSample& s) {
                      return s.target_length;
                    }));
    plot.add_series("uav-ugv distance", t, axis([](const MetricsSample& s) {
                      return (s.uav_pos - s.ugv_pos).norm();
                    }));
    plot.write(dir / "tether_len.svg");
  }
  {
    SvgPlot plot("Minimum obstacle distance", "t [s]", "distance [m]");
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = min_obstacle_distance(log.samples[i], obstacles);
    }
    plot.add_series("min_dist", t, d);
    plot.write(dir / "min_dist.svg");
  }
}

}  // namespace marsupial
