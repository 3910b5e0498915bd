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

#include "marsupial/rtf_bench.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>

#include "marsupial/engine.hpp"
#include "marsupial/errors.hpp"
#include "marsupial/metrics.hpp"
#include "marsupial/svg_plot.hpp"

namespace marsupial {

double RtfReport::mean_rtf(int element_count) const {
  double acc = 0.0;
  int n = 0;
  for (const RtfRun& r : runs) {
    if (r.element_count == element_count) {
      acc += r.rtf;
      ++n;
    }
  }
  return (n > 0) ? acc / static_cast<double>(n) : 0.0;
}

namespace {

WorldState make_hover_world(int element_count, double element_length) {
  ScenarioConfig cfg;
  cfg.tether.element_length = element_length;
  const double deployed = element_length * static_cast<double>(element_count);
  cfg.initial_deployed = deployed;
  cfg.reserve_length = deployed;  // plenty of drum margin
  cfg.max_reel_rate = 0.5;

  // Hang with about 15% slack on a 30-degree diagonal.
  const double span = deployed / 1.15;
  cfg.ugv_start = Vec3(0.0, 0.0, 0.3);
  cfg.winch_exit_offset = Vec3(0.0, 0.0, 0.2);
  cfg.uav_start =
      Vec3(span * std::cos(M_PI / 6.0), 0.0, 0.5 + span * std::sin(M_PI / 6.0));
  cfg.waypoints.clear();  // hold position
  cfg.validate();
  return build_world(cfg);
}

std::string machine_descriptor() {
  std::string model = "unknown cpu";
  std::ifstream cpuinfo("/proc/cpuinfo");
  std::string line;
  while (std::getline(cpuinfo, line)) {
    if (line.rfind("model name", 0) == 0) {
      const auto colon = line.find(':');
      if (colon != std::string::npos) {
        model = line.substr(colon + 2);
      }
      break;
    }
  }
  return model;
}

}  // namespace

RtfReport run_rtf_bench(const std::vector<int>& element_counts,
                        double sim_seconds, double element_length,
                        int repetitions) {
  if (element_counts.empty()) {
    throw std::invalid_argument("bench needs at least one element count");
  }
  if (!(sim_seconds > 0.0)) {
    throw std::invalid_argument("bench sim_seconds must be > 0");
  }
  if (repetitions < 1) {
    throw std::invalid_argument("bench repetitions must be >= 1");
  }
  for (int c : element_counts) {
    if (c < 1) throw std::invalid_argument("element counts must be >= 1");
  }

  RtfReport report;
  report.element_length = element_length;
  report.machine = machine_descriptor();

  for (int count : element_counts) {
    for (int rep = 0; rep < repetitions; ++rep) {
      WorldState w = make_hover_world(count, element_length);
      const long warmup_steps = std::lround(0.5 / w.params.dt);
      for (long i = 0; i < warmup_steps; ++i) step_world(w);

      const long steps = std::lround(sim_seconds / w.params.dt);
      const auto start = std::chrono::steady_clock::now();
      for (long i = 0; i < steps; ++i) step_world(w);
      const auto stop = std::chrono::steady_clock::now();

      RtfRun run;
      run.element_count = count;
      run.repetition = rep;
      run.sim_seconds = static_cast<double>(steps) * w.params.dt;
      run.wall_seconds =
          std::chrono::duration<double>(stop - start).count();
      run.rtf = run.sim_seconds / run.wall_seconds;
      report.runs.push_back(run);
    }
  }
  return report;
}

void write_rtf_csv(const RtfReport& report,
                   const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << "# machine: " << report.machine << '\n';
  out << "# element_length: " << format_double(report.element_length) << '\n';
  out << "element_count,repetition,sim_seconds,wall_seconds,rtf\n";
  for (const RtfRun& r : report.runs) {
    out << r.element_count << ',' << r.repetition << ','
        << format_double(r.sim_seconds) << ','
        << format_double(r.wall_seconds) << ',' << format_double(r.rtf)
        << '\n';
  }
}

void write_rtf_chart(const RtfReport& report,
                     const std::filesystem::path& path) {
  std::map<int, bool> seen;
  std::vector<double> xs, ys;
  for (const RtfRun& r : report.runs) {
    if (!seen[r.element_count]) {
      seen[r.element_count] = true;
      xs.push_back(static_cast<double>(r.element_count));
      ys.push_back(report.mean_rtf(r.element_count));
    }
  }
  SvgPlot plot("Real-time factor vs tether element count", "elements",
               "RTF [sim s / wall s]");
  plot.add_series("mean rtf", xs, ys);
  plot.write(path);
}

}  // namespace marsupial
