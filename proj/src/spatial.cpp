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

#include "marsupial/spatial.hpp"

#include <algorithm>
#include <cmath>

#include "marsupial/errors.hpp"

namespace marsupial {

void Obstacle::validate() const {
  if (friction_coeff < 0.0) {
    throw InvalidParamsError("obstacle friction_coeff must be >= 0");
  }
  if (const auto* s = std::get_if<SphereShape>(&shape)) {
    if (!(s->radius > 0.0)) {
      throw InvalidParamsError("sphere radius must be > 0");
    }
  } else {
    const auto& b = std::get<BoxShape>(shape);
    if (!(b.min_corner.x() < b.max_corner.x() &&
          b.min_corner.y() < b.max_corner.y() &&
          b.min_corner.z() < b.max_corner.z())) {
      throw InvalidParamsError("box min_corner must be < max_corner");
    }
  }
}

Obstacle Obstacle::sphere(const Vec3& center, double radius, double friction) {
  Obstacle o{SphereShape{center, radius}, friction};
  o.validate();
  return o;
}

Obstacle Obstacle::box(const Vec3& min_corner, const Vec3& max_corner,
                       double friction) {
  Obstacle o{BoxShape{min_corner, max_corner}, friction};
  o.validate();
  return o;
}

namespace {

double sphere_distance(const Vec3& p, const SphereShape& s) {
  return (p - s.center).norm() - s.radius;
}

double box_distance(const Vec3& p, const BoxShape& b) {
  // Per-axis signed excursion beyond the slab; positive outside.
  const Vec3 q = (b.min_corner - p).cwiseMax(p - b.max_corner);
  const double outside = q.cwiseMax(0.0).norm();
  const double inside = std::min(q.maxCoeff(), 0.0);
  return outside + inside;
}

Vec3 sphere_normal(const Vec3& p, const SphereShape& s) {
  const Vec3 d = p - s.center;
  const double n = d.norm();
  if (n < 1e-12) return Vec3(0.0, 0.0, 1.0);  // center: any direction works
  return d / n;
}

Vec3 box_normal(const Vec3& p, const BoxShape& b) {
  const Vec3 clamped = p.cwiseMax(b.min_corner).cwiseMin(b.max_corner);
  const Vec3 d = p - clamped;
  const double n = d.norm();
  if (n > 1e-12) return d / n;  // outside: away from closest surface point

  // Inside (or exactly on the surface): push out through the nearest face.
  const Vec3 lo = p - b.min_corner;
  const Vec3 hi = b.max_corner - p;
  int axis = 0;
  double best = std::numeric_limits<double>::infinity();
  double sign = 1.0;
  for (int k = 0; k < 3; ++k) {
    if (lo[k] < best) {
      best = lo[k];
      axis = k;
      sign = -1.0;
    }
    if (hi[k] < best) {
      best = hi[k];
      axis = k;
      sign = 1.0;
    }
  }
  Vec3 n_out = Vec3::Zero();
  n_out[axis] = sign;
  return n_out;
}

}  // namespace

double signed_distance(const Vec3& p, const Obstacle& o) {
  if (const auto* s = std::get_if<SphereShape>(&o.shape)) {
    return sphere_distance(p, *s);
  }
  return box_distance(p, std::get<BoxShape>(o.shape));
}

std::optional<Contact> contact_query(const Vec3& p, double node_radius,
                                     const Obstacle& o) {
  const double dist = signed_distance(p, o);
  if (dist >= node_radius) return std::nullopt;
  Contact c;
  c.depth = node_radius - dist;
  if (const auto* s = std::get_if<SphereShape>(&o.shape)) {
    c.normal = sphere_normal(p, *s);
  } else {
    c.normal = box_normal(p, std::get<BoxShape>(o.shape));
  }
  return c;
}

}  // namespace marsupial
