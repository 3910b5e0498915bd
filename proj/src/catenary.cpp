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

#include "marsupial/catenary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "marsupial/errors.hpp"

namespace marsupial {

namespace {

constexpr double kLengthSlackTol = 1e-9;
constexpr double kVerticalSeparationTol = 1e-6;
constexpr int kRootIterationBudget = 200;
constexpr double kRootTol = 1e-10;

// Root of sinh(x) = ratio * x, x > 0, for ratio > 1. Bracketed bisection
// narrows to 1e-3, then safeguarded Newton finishes; bisection guarantees
// convergence, Newton supplies speed.
double solve_scale_root(double ratio) {
  auto f = [ratio](double x) { return std::sinh(x) - ratio * x; };

  double lo = 1e-12;
  double hi = 1.0;
  int used = 0;
  while (f(hi) < 0.0) {
    hi *= 2.0;
    if (++used > 64) {
      throw NumericalFailureError("catenary root bracket did not close");
    }
  }

  int remaining = kRootIterationBudget;
  while (hi - lo > 1e-3) {
    if (--remaining <= 0) {
      throw NumericalFailureError("catenary bisection exhausted its budget");
    }
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  double x = 0.5 * (lo + hi);
  while (remaining-- > 0) {
    const double fx = f(x);
    if (fx < 0.0) {
      lo = std::max(lo, x);
    } else {
      hi = std::min(hi, x);
    }
    const double dfx = std::cosh(x) - ratio;
    double next = (dfx != 0.0) ? x - fx / dfx : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) < kRootTol) return next;
    x = next;
  }
  throw NumericalFailureError("catenary Newton refinement exhausted its budget");
}

}  // namespace

Vec3 CatenaryCurve::point_at_arc(double s) const {
  s = std::clamp(s, 0.0, arc_length);
  switch (kind) {
    case Kind::kTaut: {
      if (arc_length <= 0.0) return anchor_a;
      const double t = s / arc_length;
      return anchor_a + t * (anchor_b - anchor_a);
    }
    case Kind::kVertical: {
      const double down = anchor_a.z() - turn_z;
      Vec3 p = anchor_a;
      if (s <= down) {
        p.z() = anchor_a.z() - s;
      } else {
        p.z() = turn_z + (s - down);
        p.x() = anchor_b.x();
        p.y() = anchor_b.y();
      }
      return p;
    }
    case Kind::kCatenary: {
      const double sinh_a = std::sinh(u_a / param_a);
      const double u = param_a * std::asinh(sinh_a + s / param_a);
      Vec3 p = anchor_a + (u - u_a) * plane_h;
      p.z() = param_a * std::cosh(u / param_a) + z_offset;
      return p;
    }
  }
  return anchor_a;
}

CatenaryCurve solve_catenary(const Vec3& anchor_a, const Vec3& anchor_b,
                             double length) {
  const Vec3 chord_vec = anchor_b - anchor_a;
  const double chord = chord_vec.norm();
  if (length < chord - kLengthSlackTol) {
    throw LengthTooShortError("requested length " + std::to_string(length) +
                              " m is shorter than the anchor separation " +
                              std::to_string(chord) + " m");
  }

  CatenaryCurve c;
  c.anchor_a = anchor_a;
  c.anchor_b = anchor_b;

  const double dx = chord_vec.x();
  const double dy = chord_vec.y();
  const double h = std::hypot(dx, dy);
  const double v = chord_vec.z();

  if (length <= chord + kLengthSlackTol) {
    c.kind = CatenaryCurve::Kind::kTaut;
    c.arc_length = chord;
    c.vertex_offset = {h, std::min(v, 0.0)};
    return c;
  }
  c.arc_length = length;

  if (h < kVerticalSeparationTol) {
    // Coincident-anchor hang: straight down to the turning point and back up.
    c.kind = CatenaryCurve::Kind::kVertical;
    c.turn_z = 0.5 * (anchor_a.z() + anchor_b.z() - length);
    c.vertex_offset = {0.0, c.turn_z - anchor_a.z()};
    return c;
  }

  const double span = std::sqrt(length * length - v * v);
  if (span / h <= 1.0 + 1e-12) {
    // Numerically indistinguishable from a straight cable.
    c.kind = CatenaryCurve::Kind::kTaut;
    c.arc_length = chord;
    c.vertex_offset = {h, std::min(v, 0.0)};
    return c;
  }

  const double x = solve_scale_root(span / h);
  const double a = h / (2.0 * x);
  const double mid = std::atanh(v / length);  // (u_a + u_b) / (2a)

  c.kind = CatenaryCurve::Kind::kCatenary;
  c.param_a = a;
  c.plane_h = Vec3(dx / h, dy / h, 0.0);
  c.u_a = a * (mid - x);
  c.u_b = a * (mid + x);
  c.z_offset = anchor_a.z() - a * std::cosh(c.u_a / a);
  c.vertex_offset = {-c.u_a, (a + c.z_offset) - anchor_a.z()};

  const double z_b = a * std::cosh(c.u_b / a) + c.z_offset;
  const double s_b = a * (std::sinh(c.u_b / a) - std::sinh(c.u_a / a));
  if (std::abs(z_b - anchor_b.z()) > 1e-6 * std::max(1.0, std::abs(length)) ||
      std::abs(s_b - length) > 1e-6 * length) {
    throw NumericalFailureError("catenary solution failed verification");
  }
  return c;
}

std::vector<Vec3> sample_curve(const CatenaryCurve& c, int n) {
  if (n < 2) throw std::invalid_argument("sample_curve requires n >= 2");
  std::vector<Vec3> out(static_cast<std::size_t>(n));
  out.front() = c.anchor_a;
  out.back() = c.anchor_b;
  for (int i = 1; i + 1 < n; ++i) {
    const double s = c.arc_length * static_cast<double>(i) /
                     static_cast<double>(n - 1);
    out[static_cast<std::size_t>(i)] = c.point_at_arc(s);
  }
  return out;
}

double mean_catenary_error(std::span<const Vec3> nodes,
                           const CatenaryCurve& c) {
  if (nodes.empty()) {
    throw std::invalid_argument("mean_catenary_error requires nodes");
  }

  constexpr int kDenseSamples = 2048;
  constexpr int kRefineIterations = 20;

  const double total =
      (c.arc_length > 0.0) ? c.arc_length : (c.anchor_b - c.anchor_a).norm();
  if (total <= 0.0) {
    // Point-like curve: plain mean distance cannot be normalized.
    double acc = 0.0;
    for (const Vec3& p : nodes) acc += (p - c.anchor_a).norm();
    return 100.0 * acc / static_cast<double>(nodes.size());
  }

  Eigen::Matrix3Xd dense(3, kDenseSamples);
  for (int i = 0; i < kDenseSamples; ++i) {
    const double s = total * static_cast<double>(i) /
                     static_cast<double>(kDenseSamples - 1);
    dense.col(i) = c.point_at_arc(s);
  }
  const double ds = total / static_cast<double>(kDenseSamples - 1);

  double acc = 0.0;
  for (const Vec3& p : nodes) {
    Eigen::Index best = 0;
    const double best_sq =
        (dense.colwise() - p).colwise().squaredNorm().minCoeff(&best);

    // Ternary refinement of |p - curve(s)|^2 around the best dense sample.
    double lo = std::max(0.0, ds * static_cast<double>(best - 1));
    double hi = std::min(total, ds * static_cast<double>(best + 1));
    for (int it = 0; it < kRefineIterations; ++it) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      const double f1 = (c.point_at_arc(m1) - p).squaredNorm();
      const double f2 = (c.point_at_arc(m2) - p).squaredNorm();
      if (f1 < f2) {
        hi = m2;
      } else {
        lo = m1;
      }
    }
    const double refined_sq =
        (c.point_at_arc(0.5 * (lo + hi)) - p).squaredNorm();
    acc += std::sqrt(std::min(best_sq, refined_sq));
  }

  const double mean_dist = acc / static_cast<double>(nodes.size());
  return 100.0 * mean_dist / total;
}

}  // namespace marsupial
