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

#include <span>
#include <vector>

#include "marsupial/spatial.hpp"

namespace marsupial {

// Analytic hanging-cable curve through two anchors with fixed arc length.
// Used as the shape oracle a simulated tether is scored against.
//
// In the regular case the curve lives in the vertical plane through the
// anchors: z(u) = a * cosh(u / a) + z_offset, with u the horizontal
// coordinate measured from the vertex. Degenerate configurations (taut
// cable, coincident-anchor vertical hang) are flagged and evaluated in
// closed form because the cosh parameterization is singular there.
class CatenaryCurve {
 public:
  enum class Kind { kCatenary, kTaut, kVertical };

  Vec3 anchor_a{0.0, 0.0, 0.0};
  Vec3 anchor_b{0.0, 0.0, 0.0};
  double arc_length = 0.0;
  Kind kind = Kind::kTaut;

  // Regular-case parameters.
  double param_a = 0.0;          // cosh profile scale, > 0
  Vec3 plane_h{1.0, 0.0, 0.0};   // horizontal unit vector, anchor_a -> anchor_b
  double u_a = 0.0;              // horizontal coord of anchor_a from the vertex
  double u_b = 0.0;              // horizontal coord of anchor_b from the vertex
  double z_offset = 0.0;         // world z = param_a * cosh(u/param_a) + z_offset

  // (horizontal, vertical) offset of the lowest point, measured from anchor_a.
  Eigen::Vector2d vertex_offset{0.0, 0.0};

  // Vertical-hang turning point height.
  double turn_z = 0.0;

  bool degenerate() const { return kind != Kind::kCatenary; }

  // Point at arc-length s from anchor_a, s in [0, arc_length].
  Vec3 point_at_arc(double s) const;
};

// Solves the curve through the anchors with the requested arc length.
// Throws LengthTooShortError if length < |anchor_a - anchor_b| - 1e-9 and
// NumericalFailureError if the root-find does not converge.
CatenaryCurve solve_catenary(const Vec3& anchor_a, const Vec3& anchor_b,
                             double length);

// n >= 2 points equally spaced in arc length; first/last are the anchors.
std::vector<Vec3> sample_curve(const CatenaryCurve& c, int n);

// Mean node-to-curve distance as a percentage of the curve arc length.
// Closest points are found on a dense sampling refined by ternary search.
double mean_catenary_error(std::span<const Vec3> nodes,
                           const CatenaryCurve& c);

}  // namespace marsupial
