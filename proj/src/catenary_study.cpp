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

#include "marsupial/catenary_study.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <thread>

#include "marsupial/catenary.hpp"
#include "marsupial/engine.hpp"
#include "marsupial/errors.hpp"
#include "marsupial/metrics.hpp"
#include "marsupial/svg_plot.hpp"

namespace marsupial {

const StudyCell& StudyResult::cell(std::size_t elem_idx,
                                   std::size_t sep_idx) const {
  return cells.at(elem_idx * separations.size() + sep_idx);
}

double StudyResult::row_mean(std::size_t elem_idx) const {
  double acc = 0.0;
  for (std::size_t s = 0; s < separations.size(); ++s) {
    acc += cell(elem_idx, s).error_percent;
  }
  return acc / static_cast<double>(separations.size());
}

namespace {

StudyCell run_cell(double separation, double element_length,
                   double slack_factor, TetherParams params,
                   const SimParams& sim) {
  params.element_length = element_length;
  params.validate();

  const Vec3 root(0.0, 0.0, 0.0);
  const Vec3 tip(separation, 0.0, 0.0);
  const double length = slack_factor * separation;

  TetherState tether = build_tether(params, root, tip, length);
  const SettleResult settled =
      settle_tether(tether, params, sim, root, tip, {}, 60.0, 1e-6);

  const CatenaryCurve oracle = solve_catenary(root, tip, length);

  StudyCell cell;
  cell.separation = separation;
  cell.element_length = element_length;
  cell.error_percent = mean_catenary_error(tether.positions, oracle);
  cell.settle_time = settled.sim_time;
  return cell;
}

}  // namespace

StudyResult run_catenary_study(const std::vector<double>& separations,
                               const std::vector<double>& element_lengths,
                               double slack_factor,
                               const TetherParams& base_params,
                               const SimParams& sim, int workers) {
  if (separations.empty() || element_lengths.empty()) {
    throw std::invalid_argument("study needs separations and element lengths");
  }
  if (!(slack_factor >= 1.0)) {
    throw std::invalid_argument("slack_factor must be >= 1");
  }
  for (double e : element_lengths) {
    if (e > 0.2) {
      throw InvalidParamsError(
          "element length " + std::to_string(e) +
          " m exceeds the winch-supported maximum of 0.2 m");
    }
    if (!(e > 0.0)) {
      throw InvalidParamsError("element lengths must be > 0");
    }
  }
  sim.validate();

  StudyResult result;
  result.separations = separations;
  result.element_lengths = element_lengths;
  result.slack_factor = slack_factor;
  result.cells.resize(separations.size() * element_lengths.size());

  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
  }
  workers = std::max(1, std::min<int>(workers,
                                      static_cast<int>(result.cells.size())));

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= result.cells.size()) return;
      const std::size_t e = i / separations.size();
      const std::size_t s = i % separations.size();
      result.cells[i] = run_cell(separations[s], element_lengths[e],
                                 slack_factor, base_params, sim);
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers - 1));
  for (int i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();
  return result;
}

void write_study_csv(const StudyResult& result,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");

  out << "element_length";
  for (double s : result.separations) {
    out << ",err_" << format_double(s);
  }
  out << ",mean\n";
  for (std::size_t e = 0; e < result.element_lengths.size(); ++e) {
    out << format_double(result.element_lengths[e]);
    for (std::size_t s = 0; s < result.separations.size(); ++s) {
      out << ',' << format_double(result.cell(e, s).error_percent);
    }
    out << ',' << format_double(result.row_mean(e)) << '\n';
  }
}

void write_study_chart(const StudyResult& result,
                       const std::filesystem::path& path) {
  SvgPlot plot("Settled tether vs analytic curve", "element length [m]",
               "mean error [% of length]");
  for (std::size_t s = 0; s < result.separations.size(); ++s) {
    std::vector<double> xs, ys;
    for (std::size_t e = 0; e < result.element_lengths.size(); ++e) {
      xs.push_back(result.element_lengths[e]);
      ys.push_back(result.cell(e, s).error_percent);
    }
    plot.add_series(format_double(result.separations[s]) + " m apart", xs, ys);
  }
  plot.write(path);
}

}  // namespace marsupial
