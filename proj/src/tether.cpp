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

#include "marsupial/tether.hpp"

#include <algorithm>
#include <cmath>

#include "marsupial/catenary.hpp"
#include "marsupial/errors.hpp"

namespace marsupial {

namespace {

// Axial stiffness used by the compliant length projection. The Table-style
// spring constant acts as a perturbation force only; this constant is what
// actually keeps segments near their rest length (static stretch under a
// 10 N load stays below 0.2% of an element).
constexpr double kProjectionStiffness = 1e5;  // N/m

constexpr double kCountTol = 1e-9;

}  // namespace

void TetherParams::validate() const {
  if (!(element_length > 0.0) || element_length > 0.2) {
    throw InvalidParamsError(
        "tether element_length must be in (0, 0.2] m; the winch does not "
        "support longer elements");
  }
  if (!(node_radius > 0.0) || !(joint_radius > 0.0) ||
      !(element_mass > 0.0) || !(damping > 0.0) ||
      !(spring_stiffness > 0.0)) {
    throw InvalidParamsError("tether physical parameters must be > 0");
  }
}

double TetherState::total_rest_length() const {
  double sum = 0.0;
  for (double r : rest_lengths) sum += r;
  return sum;
}

int segment_count_for(double deployed_length, double element_length) {
  if (deployed_length <= 0.0) return 0;
  return std::max(
      1, static_cast<int>(
             std::ceil(deployed_length / element_length - kCountTol)));
}

std::vector<double> node_masses(const TetherState& s, const TetherParams& p) {
  const int n = s.node_count();
  std::vector<double> m(static_cast<std::size_t>(n), 0.0);
  if (n == 1) {
    m[0] = p.element_mass;  // detached probe node
    return m;
  }
  for (int i = 0; i + 1 < n; ++i) {
    m[static_cast<std::size_t>(i)] += 0.5 * p.element_mass;
    m[static_cast<std::size_t>(i + 1)] += 0.5 * p.element_mass;
  }
  return m;
}

TetherState build_tether(const TetherParams& params, const Vec3& root,
                         const Vec3& tip, double deployed_length) {
  params.validate();
  if (deployed_length < 0.0) {
    throw InvalidParamsError("deployed_length must be >= 0");
  }

  TetherState s;
  const int n_seg = segment_count_for(deployed_length, params.element_length);
  const int n = n_seg + 1;

  if (n_seg == 0) {
    s.positions = {root};
    s.velocities = {Vec3::Zero()};
    return s;
  }

  s.rest_lengths.assign(static_cast<std::size_t>(n_seg),
                        params.element_length);
  s.rest_lengths[0] =
      deployed_length - params.element_length * static_cast<double>(n_seg - 1);

  s.positions.resize(static_cast<std::size_t>(n));
  s.velocities.assign(static_cast<std::size_t>(n), Vec3::Zero());

  const double chord = (tip - root).norm();
  if (deployed_length <= chord) {
    // Taut start: spread the nodes along the straight segment in proportion
    // to the rest lengths.
    double s_acc = 0.0;
    const double total = s.total_rest_length();
    for (int i = 0; i < n; ++i) {
      const double t = (total > 0.0) ? s_acc / total : 0.0;
      s.positions[static_cast<std::size_t>(i)] = root + t * (tip - root);
      if (i < n_seg) s_acc += s.rest_lengths[static_cast<std::size_t>(i)];
    }
  } else {
    const CatenaryCurve curve = solve_catenary(root, tip, deployed_length);
    double s_acc = 0.0;
    for (int i = 0; i < n; ++i) {
      s.positions[static_cast<std::size_t>(i)] = curve.point_at_arc(s_acc);
      if (i < n_seg) s_acc += s.rest_lengths[static_cast<std::size_t>(i)];
    }
    if (curve.kind == CatenaryCurve::Kind::kVertical) {
      // The doubled vertical line stacks both legs of the fold on one axis;
      // bow the chain slightly so consecutive nodes never coincide.
      const double amplitude = std::max(0.01, 0.02 * deployed_length);
      s_acc = 0.0;
      for (int i = 0; i < n; ++i) {
        s.positions[static_cast<std::size_t>(i)].x() +=
            amplitude * std::sin(M_PI * s_acc / deployed_length);
        if (i < n_seg) s_acc += s.rest_lengths[static_cast<std::size_t>(i)];
      }
    }
    s.positions.front() = root;
    s.positions.back() = tip;
  }
  return s;
}

std::vector<Vec3> accumulate_forces(const TetherState& s,
                                    const TetherParams& params, double gravity,
                                    const std::vector<NodeContact>& contacts,
                                    const ContactParams& contact_params) {
  const int n = s.node_count();
  const std::vector<double> masses = node_masses(s, params);
  std::vector<Vec3> forces(static_cast<std::size_t>(n), Vec3::Zero());

  for (int i = 0; i < n; ++i) {
    forces[static_cast<std::size_t>(i)].z() -=
        masses[static_cast<std::size_t>(i)] * gravity;
  }

  for (int i = 0; i + 1 < n; ++i) {
    const Vec3 d = s.positions[static_cast<std::size_t>(i + 1)] -
                   s.positions[static_cast<std::size_t>(i)];
    const double len = d.norm();
    if (len < 1e-12) continue;
    const Vec3 dir = d / len;

    const double stretch = len - s.rest_lengths[static_cast<std::size_t>(i)];
    const Vec3 rel_vel = s.velocities[static_cast<std::size_t>(i + 1)] -
                         s.velocities[static_cast<std::size_t>(i)];
    const double axial_rate = rel_vel.dot(dir);

    const Vec3 pair = (params.spring_stiffness * stretch +
                       params.damping * axial_rate) *
                      dir;
    forces[static_cast<std::size_t>(i)] += pair;
    forces[static_cast<std::size_t>(i + 1)] -= pair;
  }

  for (const NodeContact& c : contacts) {
    if (c.node < 0 || c.node >= n) continue;
    const Vec3& vel = s.velocities[static_cast<std::size_t>(c.node)];
    const double v_n = vel.dot(c.normal);
    double f_n = contact_params.stiffness * c.depth -
                 contact_params.damping * v_n;
    f_n = std::max(f_n, 0.0);  // push only, no adhesion
    forces[static_cast<std::size_t>(c.node)] += f_n * c.normal;

    const Vec3 v_t = vel - v_n * c.normal;
    const double speed_t = v_t.norm();
    if (speed_t > 0.0 && f_n > 0.0) {
      constexpr double kSlipRegularization = 1e-4;  // m/s
      const double scale =
          c.friction * f_n / std::max(speed_t, kSlipRegularization);
      forces[static_cast<std::size_t>(c.node)] -= scale * v_t;
    }
  }
  return forces;
}

void integrate_nodes(TetherState& s, const std::vector<Vec3>& forces,
                     const TetherParams& params, double dt) {
  const std::vector<double> masses = node_masses(s, params);
  const int n = s.node_count();
  for (int i = 0; i < n; ++i) {
    if (s.node_pinned(i)) continue;
    const std::size_t k = static_cast<std::size_t>(i);
    s.velocities[k] += (dt / masses[k]) * forces[k];
    s.positions[k] += dt * s.velocities[k];
  }
}

double project_inextensible(TetherState& s, const TetherParams& params,
                            int iterations, double dt,
                            ProjectionReactions* reactions) {
  const int n_seg = s.segment_count();
  if (n_seg == 0 || iterations <= 0) return 0.0;

  const int n = s.node_count();
  const std::vector<double> masses = node_masses(s, params);
  std::vector<double> inv_mass(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    inv_mass[static_cast<std::size_t>(i)] =
        s.node_pinned(i) ? 0.0 : 1.0 / masses[static_cast<std::size_t>(i)];
  }

  // Compliance in XPBD form; dt <= 0 degenerates to rigid constraints.
  const double compliance =
      (dt > 0.0) ? 1.0 / (kProjectionStiffness * dt * dt) : 0.0;

  const std::vector<Vec3> before = s.positions;
  std::vector<double> lambda(static_cast<std::size_t>(n_seg), 0.0);
  Vec3 reaction_root = Vec3::Zero();
  Vec3 reaction_tip = Vec3::Zero();

  for (int it = 0; it < iterations; ++it) {
    // Alternate sweep direction; error otherwise drains toward one end.
    const bool forward = (it % 2 == 0);
    for (int k = 0; k < n_seg; ++k) {
      const int seg = forward ? k : n_seg - 1 - k;
      const std::size_t i = static_cast<std::size_t>(seg);
      const std::size_t j = static_cast<std::size_t>(seg + 1);
      const double w_sum = inv_mass[i] + inv_mass[j];
      if (w_sum + compliance <= 0.0) continue;

      const Vec3 d = s.positions[j] - s.positions[i];
      const double len = d.norm();
      if (len < 1e-12) continue;
      const Vec3 dir = d / len;

      const double violation = len - s.rest_lengths[i];
      const double d_lambda =
          (-violation - compliance * lambda[i]) / (w_sum + compliance);
      lambda[i] += d_lambda;

      s.positions[i] -= inv_mass[i] * d_lambda * dir;
      s.positions[j] += inv_mass[j] * d_lambda * dir;

      if (reactions != nullptr && dt > 0.0) {
        // Constraint impulse pair is +/- d_lambda * dir / dt; the share a
        // pinned node would have received is carried by its pin.
        if (inv_mass[i] == 0.0 && seg == 0 && s.root_anchored) {
          reaction_root -= (d_lambda / dt) * dir;
        }
        if (inv_mass[j] == 0.0 && seg == n_seg - 1 && s.tip_anchored) {
          reaction_tip += (d_lambda / dt) * dir;
        }
      }
    }
  }

  if (dt > 0.0) {
    for (int i = 0; i < n; ++i) {
      const std::size_t k = static_cast<std::size_t>(i);
      if (inv_mass[k] > 0.0) {
        s.velocities[k] += (s.positions[k] - before[k]) / dt;
      }
    }
  }
  if (reactions != nullptr) {
    reactions->root = reaction_root;
    reactions->tip = reaction_tip;
  }

  double max_rel = 0.0;
  for (int k = 0; k < n_seg; ++k) {
    const std::size_t i = static_cast<std::size_t>(k);
    const double len =
        (s.positions[i + 1] - s.positions[i]).norm();
    max_rel = std::max(max_rel,
                       std::abs(len - s.rest_lengths[i]) / s.rest_lengths[i]);
  }
  return max_rel;
}

double kinetic_energy(const TetherState& s, const TetherParams& params) {
  const std::vector<double> masses = node_masses(s, params);
  double e = 0.0;
  for (int i = 0; i < s.node_count(); ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    e += 0.5 * masses[k] * s.velocities[k].squaredNorm();
  }
  return e;
}

}  // namespace marsupial
