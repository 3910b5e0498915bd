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

#include <optional>
#include <variant>

#include <Eigen/Core>

namespace marsupial {

using Vec3 = Eigen::Vector3d;

// Rescales v so its norm does not exceed max_norm.
inline Vec3 clamp_norm(const Vec3& v, double max_norm) {
  const double n = v.norm();
  if (n <= max_norm || n == 0.0) return v;
  return v * (max_norm / n);
}

struct SphereShape {
  Vec3 center{0.0, 0.0, 0.0};
  double radius = 1.0;
};

struct BoxShape {
  Vec3 min_corner{0.0, 0.0, 0.0};  // must be < max_corner componentwise
  Vec3 max_corner{1.0, 1.0, 1.0};
};

struct Obstacle {
  std::variant<SphereShape, BoxShape> shape;
  double friction_coeff = 0.5;

  // Throws InvalidParamsError if the shape is degenerate.
  void validate() const;

  static Obstacle sphere(const Vec3& center, double radius,
                         double friction = 0.5);
  static Obstacle box(const Vec3& min_corner, const Vec3& max_corner,
                      double friction = 0.5);
};

// Euclidean distance from p to the obstacle surface, negative inside.
// For spheres this is exactly |p - center| - radius.
double signed_distance(const Vec3& p, const Obstacle& o);

struct Contact {
  double depth = 0.0;  // penetration of the node sphere, > 0
  Vec3 normal{0.0, 0.0, 1.0};  // unit, points from obstacle toward the node
};

// Present iff signed_distance(p, o) < node_radius.
std::optional<Contact> contact_query(const Vec3& p, double node_radius,
                                     const Obstacle& o);

}  // namespace marsupial
