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
#include <vector>

#include "marsupial/scenario.hpp"
#include "marsupial/tether.hpp"

namespace marsupial {

// One tether-fidelity experiment cell: build a chain between anchors a
// given separation apart with proportional slack, relax it, and score the
// settled shape against the analytic hanging curve of the same length.
struct StudyCell {
  double separation = 0.0;      // m between anchors
  double element_length = 0.0;  // m
  double error_percent = 0.0;   // mean node error, % of tether length
  double settle_time = 0.0;     // s of simulated relaxation
};

struct StudyResult {
  std::vector<double> separations;
  std::vector<double> element_lengths;
  double slack_factor = 1.2;
  std::vector<StudyCell> cells;  // row-major: element length x separation

  const StudyCell& cell(std::size_t elem_idx, std::size_t sep_idx) const;
  double row_mean(std::size_t elem_idx) const;
};

// Runs every (element length, separation) combination. Element lengths above
// 0.2 m are rejected (winch mechanical limit). Cells are independent and may
// run on parallel workers; results are stored in a fixed order regardless.
StudyResult run_catenary_study(const std::vector<double>& separations,
                               const std::vector<double>& element_lengths,
                               double slack_factor,
                               const TetherParams& base_params,
                               const SimParams& sim, int workers = 0);

// Table-shaped CSV: one row per element length, one error column per
// separation, then the row mean.
void write_study_csv(const StudyResult& result,
                     const std::filesystem::path& path);

void write_study_chart(const StudyResult& result,
                       const std::filesystem::path& path);

}  // namespace marsupial
