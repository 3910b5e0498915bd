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
#include <string>
#include <vector>

#include "marsupial/scenario.hpp"

namespace marsupial {

// One timed hover run. rtf = simulated seconds per wall-clock second,
// measured around the stepping loop only.
struct RtfRun {
  int element_count = 0;
  int repetition = 0;
  double sim_seconds = 0.0;
  double wall_seconds = 0.0;
  double rtf = 0.0;
};

struct RtfReport {
  std::vector<RtfRun> runs;
  double element_length = 0.15;
  std::string machine;

  double mean_rtf(int element_count) const;
};

// Times a pinned hover scenario (static vehicles, no obstacles) so the
// deployed element count is the only varying cost driver. Runs execute
// strictly sequentially to keep the timings uncontended. Absolute values are
// hardware-specific; the element-count trend is the comparable quantity.
RtfReport run_rtf_bench(const std::vector<int>& element_counts,
                        double sim_seconds, double element_length,
                        int repetitions = 3);

void write_rtf_csv(const RtfReport& report, const std::filesystem::path& path);
void write_rtf_chart(const RtfReport& report,
                     const std::filesystem::path& path);

}  // namespace marsupial
