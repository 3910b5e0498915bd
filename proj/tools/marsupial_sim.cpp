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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "marsupial/catenary_study.hpp"
#include "marsupial/charts.hpp"
#include "marsupial/engine.hpp"
#include "marsupial/errors.hpp"
#include "marsupial/metrics.hpp"
#include "marsupial/rtf_bench.hpp"
#include "marsupial/scenario.hpp"

namespace {

namespace fs = std::filesystem;
using namespace marsupial;

constexpr int kExitOk = 0;
constexpr int kExitTimeout = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDivergence = 3;

fs::path default_out_root() {
  if (const char* env = std::getenv("MARSUPIAL_OUT_ROOT")) {
    return fs::path(env);
  }
  return fs::path("out");
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot open " + p.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void run_once(const ScenarioConfig& cfg, const fs::path& out_dir) {
  const MetricsLog log = run_scenario(cfg);
  const MetricsSummary summary = summarize(log, cfg.obstacles);
  write_csv(log, summary, out_dir);
  write_charts(log, cfg.obstacles, out_dir);

  std::cout << "run complete: " << log.targets_reached << '/'
            << log.targets_total << " targets in "
            << format_double(summary.sim_time) << " s\n"
            << "  dist_uav=" << format_double(summary.dist_uav)
            << " m dist_ugv=" << format_double(summary.dist_ugv)
            << " m released=" << format_double(summary.tether_released)
            << " m collected=" << format_double(summary.tether_collected)
            << " m\n"
            << "  cat_error=" << format_double(summary.cat_error)
            << " % min_dist=" << format_double(summary.min_dist) << " m\n"
            << "outputs in " << out_dir.string() << "\n";
}

int cmd_run(const fs::path& config_path, fs::path out_dir, double log_rate,
            double timeout, bool seedless_check) {
  ScenarioConfig cfg = load_scenario(config_path);
  if (log_rate > 0.0) cfg.log_rate = log_rate;
  if (timeout > 0.0) cfg.timeout = timeout;

  if (out_dir.empty()) out_dir = default_out_root() / "run";

  if (!seedless_check) {
    run_once(cfg, out_dir);
    return kExitOk;
  }

  const fs::path dir_a = out_dir / "a";
  const fs::path dir_b = out_dir / "b";
  run_once(cfg, dir_a);
  run_once(cfg, dir_b);
  for (const char* name : {"uav.csv", "ugv.csv", "tether.csv", "summary.csv"}) {
    if (read_file(dir_a / name) != read_file(dir_b / name)) {
      std::cerr << "determinism check FAILED: " << name
                << " differs between runs\n";
      return kExitDivergence;
    }
  }
  std::cout << "determinism check passed: both runs byte-identical\n";
  return kExitOk;
}

int cmd_catenary_study(const std::vector<double>& separations,
                       const std::vector<double>& element_lengths,
                       double slack, fs::path out_dir, int parallel) {
  if (out_dir.empty()) out_dir = default_out_root() / "catenary_study";
  fs::create_directories(out_dir);

  TetherParams params;
  SimParams sim;
  const StudyResult result = run_catenary_study(
      separations, element_lengths, slack, params, sim, parallel);

  write_study_csv(result, out_dir / "catenary_study.csv");
  write_study_chart(result, out_dir / "catenary_study.svg");

  std::cout << "element_length";
  for (double s : result.separations) {
    std::cout << "  err_" << format_double(s) << "m(%)";
  }
  std::cout << "  mean(%)\n";
  for (std::size_t e = 0; e < result.element_lengths.size(); ++e) {
    std::cout << format_double(result.element_lengths[e]);
    for (std::size_t s = 0; s < result.separations.size(); ++s) {
      std::cout << "  " << format_double(result.cell(e, s).error_percent);
    }
    std::cout << "  " << format_double(result.row_mean(e)) << '\n';
  }
  std::cout << "outputs in " << out_dir.string() << "\n";
  return kExitOk;
}

int cmd_bench_rtf(const std::vector<int>& counts, double sim_seconds,
                  double element_length, int repetitions, fs::path out_dir) {
  if (out_dir.empty()) out_dir = default_out_root() / "bench_rtf";
  fs::create_directories(out_dir);

  const RtfReport report =
      run_rtf_bench(counts, sim_seconds, element_length, repetitions);
  write_rtf_csv(report, out_dir / "rtf.csv");
  write_rtf_chart(report, out_dir / "rtf.svg");

  std::cout << "machine: " << report.machine << '\n';
  std::cout << "elements  mean_rtf\n";
  for (int c : counts) {
    std::cout << c << "  " << format_double(report.mean_rtf(c)) << '\n';
  }
  std::cout << "outputs in " << out_dir.string() << "\n";
  return kExitOk;
}

int cmd_replay_metrics(const fs::path& dir, const fs::path& config_path) {
  std::vector<Obstacle> obstacles;
  if (!config_path.empty()) {
    obstacles = load_scenario(config_path).obstacles;
  }
  const MetricsLog log = read_csv_log(dir, obstacles);
  const MetricsSummary summary = summarize(log, obstacles);
  write_csv(log, summary, dir);
  write_charts(log, obstacles, dir);
  std::cout << "summary recomputed from " << log.samples.size()
            << " samples: dist_uav=" << format_double(summary.dist_uav)
            << " m dist_ugv=" << format_double(summary.dist_ugv)
            << " m released=" << format_double(summary.tether_released)
            << " m collected=" << format_double(summary.tether_collected)
            << " m cat_error=" << format_double(summary.cat_error) << " %\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Headless tethered UAV-UGV simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  double log_rate = 0.0;
  double timeout = 0.0;
  bool seedless_check = false;

  CLI::App* run = app.add_subcommand("run", "run a scenario config");
  run->add_option("--config", config_path, "scenario JSON file")->required();
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--log-rate", log_rate, "sampling rate in Hz of sim time");
  run->add_option("--timeout", timeout, "sim-time limit in s");
  run->add_flag("--seedless-check", seedless_check,
                "run twice and verify byte-identical CSVs");

  std::vector<double> separations{5.0, 10.0, 15.0};
  std::vector<double> element_lengths{0.05, 0.10, 0.15, 0.20};
  double slack = 1.2;
  int parallel = 0;
  CLI::App* study = app.add_subcommand(
      "catenary-study", "settle chains and score them against the analytic curve");
  study->add_option("--separations", separations, "anchor separations in m");
  study->add_option("--element-lengths", element_lengths,
                    "element lengths in m (max 0.2)");
  study->add_option("--slack", slack, "length / separation ratio");
  study->add_option("--out", out_dir, "output directory");
  study->add_option("--parallel", parallel,
                    "worker threads (0 = hardware concurrency)");

  std::vector<int> counts{100, 400, 700};
  double sim_seconds = 10.0;
  double element_length = 0.15;
  int repetitions = 3;
  CLI::App* bench = app.add_subcommand("bench-rtf",
                                       "measure real-time factor vs element count");
  bench->add_option("--counts", counts, "tether element counts");
  bench->add_option("--sim-seconds", sim_seconds, "simulated time per run");
  bench->add_option("--element-length", element_length, "element length in m");
  bench->add_option("--repeat", repetitions, "repetitions per count");
  bench->add_option("--out", out_dir, "output directory");

  std::string replay_dir;
  std::string replay_config;
  CLI::App* replay = app.add_subcommand(
      "replay-metrics", "recompute the summary from existing CSV logs");
  replay->add_option("--dir", replay_dir, "directory with uav/ugv/tether CSVs")
      ->required();
  replay->add_option("--config", replay_config,
                     "scenario config for obstacle distances");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(config_path, out_dir, log_rate, timeout, seedless_check);
    }
    if (study->parsed()) {
      return cmd_catenary_study(separations, element_lengths, slack, out_dir,
                                parallel);
    }
    if (bench->parsed()) {
      return cmd_bench_rtf(counts, sim_seconds, element_length, repetitions,
                           out_dir);
    }
    if (replay->parsed()) {
      return cmd_replay_metrics(replay_dir, replay_config);
    }
  } catch (const TimeoutError& e) {
    std::cerr << "timeout: " << e.what() << '\n';
    return kExitTimeout;
  } catch (const DivergenceError& e) {
    std::cerr << "numerical divergence: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitConfig;
  } catch (const SimError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitOk;
}
