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

namespace marsupial {

// Minimal deterministic SVG line plotter: axes, ticks, polylines, legend.
// Output is a pure function of the added data, so regenerated charts are
// byte-identical.
class SvgPlot {
 public:
  SvgPlot(std::string title, std::string x_label, std::string y_label,
          int width = 860, int height = 480);

  void add_series(std::string name, std::vector<double> xs,
                  std::vector<double> ys);

  void write(const std::filesystem::path& path) const;

 private:
  struct Series {
    std::string name;
    std::vector<double> xs;
    std::vector<double> ys;
  };

  std::string title_;
  std::string x_label_;
  std::string y_label_;
  int width_;
  int height_;
  std::vector<Series> series_;
};

}  // namespace marsupial
