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

#include "marsupial/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>

#include "marsupial/catenary.hpp"
#include "marsupial/errors.hpp"

namespace marsupial {

double path_distance(std::span<const Vec3> points) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    total += (points[i + 1] - points[i]).norm();
  }
  return total;
}

double tether_released(std::span<const double> lengths) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < lengths.size(); ++i) {
    total += std::max(0.0, lengths[i + 1] - lengths[i]);
  }
  return total;
}

double tether_collected(std::span<const double> lengths) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < lengths.size(); ++i) {
    total += std::max(0.0, lengths[i] - lengths[i + 1]);
  }
  return total;
}

double min_obstacle_distance(const MetricsSample& sample,
                             std::span<const Obstacle> obstacles) {
  double best = std::numeric_limits<double>::infinity();
  for (const Obstacle& o : obstacles) {
    for (const Vec3& p : sample.tether_nodes) {
      best = std::min(best, signed_distance(p, o));
    }
    best = std::min(best, signed_distance(sample.uav_pos, o));
    best = std::min(best, signed_distance(sample.ugv_pos, o));
  }
  return best;
}

MetricsSummary summarize(const MetricsLog& log,
                         std::span<const Obstacle> obstacles) {
  if (log.samples.empty()) throw SimError("empty log");

  MetricsSummary out;
  out.sim_time = log.final_time;
  out.targets = log.targets_reached;

  std::vector<Vec3> uav_path, ugv_path;
  std::vector<double> lengths;
  uav_path.reserve(log.samples.size());
  ugv_path.reserve(log.samples.size());
  lengths.reserve(log.samples.size());
  for (const MetricsSample& s : log.samples) {
    uav_path.push_back(s.uav_pos);
    ugv_path.push_back(s.ugv_pos);
    lengths.push_back(s.deployed_length);
  }
  out.dist_uav = path_distance(uav_path);
  out.dist_ugv = path_distance(ugv_path);
  out.tether_released = tether_released(lengths);
  out.tether_collected = tether_collected(lengths);

  double err_acc = 0.0;
  std::size_t err_count = 0;
  double min_dist = std::numeric_limits<double>::infinity();
  for (const MetricsSample& s : log.samples) {
    min_dist = std::min(min_dist, min_obstacle_distance(s, obstacles));

    if (s.tether_nodes.size() < 2) {
      ++out.cat_error_skipped;
      continue;
    }
    const Vec3& root = s.tether_nodes.front();
    const Vec3& tip = s.tether_nodes.back();
    const double chord = (tip - root).norm();
    // The hanging-curve oracle is degenerate for taut or near-coincident
    // anchors; those samples are skipped and counted.
    if (s.deployed_length <= chord + 1e-9 || chord < 1e-6) {
      ++out.cat_error_skipped;
      continue;
    }
    try {
      const CatenaryCurve curve = solve_catenary(root, tip, s.deployed_length);
      err_acc += mean_catenary_error(s.tether_nodes, curve);
      ++err_count;
    } catch (const SimError&) {
      ++out.cat_error_skipped;
    }
  }
  out.cat_error = (err_count > 0) ? err_acc / static_cast<double>(err_count)
                                  : 0.0;
  out.min_dist = min_dist;
  return out;
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

void append_vec3(std::string& line, const Vec3& v) {
  line += ',';
  line += format_double(v.x());
  line += ',';
  line += format_double(v.y());
  line += ',';
  line += format_double(v.z());
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_double(const std::string& text, const std::string& where) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    // from_chars does not accept "inf"/"nan" spellings.
    if (text == "inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    throw ParseError(where + ": cannot parse number '" + text + "'");
  }
  return v;
}

std::vector<std::vector<std::string>> read_rows(
    const std::filesystem::path& path, const std::string& expected_header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError(path.string() + ": missing header row");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != expected_header) {
    throw ParseError(path.string() + ": unexpected header '" + line + "'");
  }
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rows.push_back(split_csv(line));
  }
  return rows;
}

}  // namespace

void write_csv(const MetricsLog& log, const MetricsSummary& summary,
               const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);

  {
    std::ofstream out = open_out(dir / "uav.csv");
    out << "t,ux,uy,uz,uvx,uvy,uvz,gx,gy,gz,target_idx\n";
    for (const MetricsSample& s : log.samples) {
      std::string line = format_double(s.t);
      append_vec3(line, s.uav_pos);
      append_vec3(line, s.uav_vel);
      append_vec3(line, s.uav_goal);
      line += ',';
      line += std::to_string(s.target_index);
      line += '\n';
      out << line;
    }
  }
  {
    std::ofstream out = open_out(dir / "ugv.csv");
    out << "t,gx_,gy_,gz_,gvx,gvy,gvz,deployed,target_len\n";
    for (const MetricsSample& s : log.samples) {
      std::string line = format_double(s.t);
      append_vec3(line, s.ugv_pos);
      append_vec3(line, s.ugv_vel);
      line += ',';
      line += format_double(s.deployed_length);
      line += ',';
      line += format_double(s.target_length);
      line += '\n';
      out << line;
    }
  }
  {
    std::ofstream out = open_out(dir / "tether.csv");
    out << "t,node_idx,x,y,z\n";
    for (const MetricsSample& s : log.samples) {
      for (std::size_t i = 0; i < s.tether_nodes.size(); ++i) {
        std::string line = format_double(s.t);
        line += ',';
        line += std::to_string(i);
        append_vec3(line, s.tether_nodes[i]);
        line += '\n';
        out << line;
      }
    }
  }
  {
    std::ofstream out = open_out(dir / "summary.csv");
    out << "sim_time,targets,dist_ugv,dist_uav,tether_released,"
           "tether_collected,cat_error,min_dist,cat_error_skipped\n";
    out << format_double(summary.sim_time) << ',' << summary.targets << ','
        << format_double(summary.dist_ugv) << ','
        << format_double(summary.dist_uav) << ','
        << format_double(summary.tether_released) << ','
        << format_double(summary.tether_collected) << ','
        << format_double(summary.cat_error) << ','
        << format_double(summary.min_dist) << ','
        << summary.cat_error_skipped << '\n';
  }
}

MetricsLog read_csv_log(const std::filesystem::path& dir,
                        std::span<const Obstacle> obstacles) {
  const auto uav_rows =
      read_rows(dir / "uav.csv", "t,ux,uy,uz,uvx,uvy,uvz,gx,gy,gz,target_idx");
  const auto ugv_rows =
      read_rows(dir / "ugv.csv", "t,gx_,gy_,gz_,gvx,gvy,gvz,deployed,target_len");
  const auto tether_rows = read_rows(dir / "tether.csv", "t,node_idx,x,y,z");

  if (uav_rows.size() != ugv_rows.size()) {
    throw ParseError("uav.csv and ugv.csv sample counts differ");
  }

  MetricsLog log;
  log.samples.resize(uav_rows.size());
  for (std::size_t i = 0; i < uav_rows.size(); ++i) {
    const auto& u = uav_rows[i];
    const auto& g = ugv_rows[i];
    if (u.size() != 11) throw ParseError("uav.csv: expected 11 columns");
    if (g.size() != 9) throw ParseError("ugv.csv: expected 9 columns");
    MetricsSample& s = log.samples[i];
    s.t = parse_double(u[0], "uav.csv t");
    s.uav_pos = Vec3(parse_double(u[1], "ux"), parse_double(u[2], "uy"),
                     parse_double(u[3], "uz"));
    s.uav_vel = Vec3(parse_double(u[4], "uvx"), parse_double(u[5], "uvy"),
                     parse_double(u[6], "uvz"));
    s.uav_goal = Vec3(parse_double(u[7], "gx"), parse_double(u[8], "gy"),
                      parse_double(u[9], "gz"));
    s.target_index = static_cast<std::size_t>(
        parse_double(u[10], "target_idx"));
    s.ugv_pos = Vec3(parse_double(g[1], "gx_"), parse_double(g[2], "gy_"),
                     parse_double(g[3], "gz_"));
    s.ugv_vel = Vec3(parse_double(g[4], "gvx"), parse_double(g[5], "gvy"),
                     parse_double(g[6], "gvz"));
    s.deployed_length = parse_double(g[7], "deployed");
    s.target_length = parse_double(g[8], "target_len");
  }

  std::size_t sample_idx = 0;
  for (const auto& row : tether_rows) {
    if (row.size() != 5) throw ParseError("tether.csv: expected 5 columns");
    const double t = parse_double(row[0], "tether.csv t");
    while (sample_idx < log.samples.size() &&
           log.samples[sample_idx].t != t) {
      ++sample_idx;
    }
    if (sample_idx >= log.samples.size()) {
      throw ParseError("tether.csv: sample time not present in uav.csv");
    }
    log.samples[sample_idx].tether_nodes.emplace_back(
        parse_double(row[2], "x"), parse_double(row[3], "y"),
        parse_double(row[4], "z"));
  }

  for (MetricsSample& s : log.samples) {
    s.min_obstacle_dist = min_obstacle_distance(s, obstacles);
  }
  if (!log.samples.empty()) {
    log.final_time = log.samples.back().t;
    log.targets_reached = log.samples.back().target_index;
    log.targets_total = log.targets_reached;
    if (log.samples.size() >= 2) {
      log.log_interval = log.samples[1].t - log.samples[0].t;
    }
    log.complete = true;
  }
  return log;
}

}  // namespace marsupial
