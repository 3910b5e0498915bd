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

#include "marsupial/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "marsupial/errors.hpp"

namespace marsupial {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf"};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Rounds the span to a pleasant tick spacing (1/2/5 ladder).
double tick_step(double span) {
  if (!(span > 0.0)) return 1.0;
  const double raw = span / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  if (norm < 1.5) return mag;
  if (norm < 3.5) return 2.0 * mag;
  if (norm < 7.5) return 5.0 * mag;
  return 10.0 * mag;
}

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label,
                 int width, int height)
    : title_(std::move(title)),
      x_label_(std::move(x_label)),
      y_label_(std::move(y_label)),
      width_(width),
      height_(height) {}

void SvgPlot::add_series(std::string name, std::vector<double> xs,
                         std::vector<double> ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("series x and y sizes differ");
  }
  series_.push_back(Series{std::move(name), std::move(xs), std::move(ys)});
}

void SvgPlot::write(const std::filesystem::path& path) const {
  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min;
  double y_min = x_min;
  double y_max = -x_min;
  for (const Series& s : series_) {
    for (double v : s.xs) {
      if (std::isfinite(v)) {
        x_min = std::min(x_min, v);
        x_max = std::max(x_max, v);
      }
    }
    for (double v : s.ys) {
      if (std::isfinite(v)) {
        y_min = std::min(y_min, v);
        y_max = std::max(y_max, v);
      }
    }
  }
  if (!(x_min <= x_max)) {
    x_min = 0.0;
    x_max = 1.0;
  }
  if (!(y_min <= y_max)) {
    y_min = 0.0;
    y_max = 1.0;
  }
  if (x_max - x_min < 1e-12) {
    x_min -= 0.5;
    x_max += 0.5;
  }
  if (y_max - y_min < 1e-12) {
    y_min -= 0.5;
    y_max += 0.5;
  }

  const double ml = 70.0, mr = 160.0, mt = 44.0, mb = 56.0;
  const double pw = width_ - ml - mr;
  const double ph = height_ - mt - mb;
  auto map_x = [&](double x) {
    return ml + pw * (x - x_min) / (x_max - x_min);
  };
  auto map_y = [&](double y) {
    return mt + ph * (1.0 - (y - y_min) / (y_max - y_min));
  };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_
      << "\" height=\"" << height_ << "\" font-family=\"sans-serif\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << fmt(ml + pw / 2.0)
      << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << title_
      << "</text>\n";

  const double sx = tick_step(x_max - x_min);
  for (double t = std::ceil(x_min / sx) * sx; t <= x_max + 1e-9 * sx;
       t += sx) {
    const double px = map_x(t);
    out << "<line x1=\"" << fmt(px) << "\" y1=\"" << fmt(mt) << "\" x2=\""
        << fmt(px) << "\" y2=\"" << fmt(mt + ph)
        << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << fmt(px) << "\" y=\"" << fmt(mt + ph + 18)
        << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt(t)
        << "</text>\n";
  }
  const double sy = tick_step(y_max - y_min);
  for (double t = std::ceil(y_min / sy) * sy; t <= y_max + 1e-9 * sy;
       t += sy) {
    const double py = map_y(t);
    out << "<line x1=\"" << fmt(ml) << "\" y1=\"" << fmt(py) << "\" x2=\""
        << fmt(ml + pw) << "\" y2=\"" << fmt(py)
        << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << fmt(ml - 6) << "\" y=\"" << fmt(py + 4)
        << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(t)
        << "</text>\n";
  }

  out << "<rect x=\"" << fmt(ml) << "\" y=\"" << fmt(mt) << "\" width=\""
      << fmt(pw) << "\" height=\"" << fmt(ph)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "<text x=\"" << fmt(ml + pw / 2.0) << "\" y=\""
      << fmt(height_ - 14.0) << "\" text-anchor=\"middle\" font-size=\"13\">"
      << x_label_ << "</text>\n";
  out << "<text x=\"18\" y=\"" << fmt(mt + ph / 2.0)
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
      << fmt(mt + ph / 2.0) << ")\">" << y_label_ << "</text>\n";

  for (std::size_t si = 0; si < series_.size(); ++si) {
    const Series& s = series_[si];
    const char* color = kPalette[si % (sizeof(kPalette) / sizeof(*kPalette))];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) continue;
      out << fmt(map_x(s.xs[i])) << ',' << fmt(map_y(s.ys[i])) << ' ';
    }
    out << "\"/>\n";

    const double ly = mt + 16.0 + 18.0 * static_cast<double>(si);
    out << "<line x1=\"" << fmt(ml + pw + 10) << "\" y1=\"" << fmt(ly)
        << "\" x2=\"" << fmt(ml + pw + 34) << "\" y2=\"" << fmt(ly)
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << fmt(ml + pw + 40) << "\" y=\"" << fmt(ly + 4)
        << "\" font-size=\"12\">" << s.name << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace marsupial
