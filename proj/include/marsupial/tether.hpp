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

#include <vector>

#include "marsupial/spatial.hpp"

namespace marsupial {

// Physical parameters of one tether element. Segment length is capped at
// 0.2 m by the winch mechanism.
struct TetherParams {
  double element_length = 0.05;    // m
  double node_radius = 0.004;      // m
  double joint_radius = 0.009;     // m, contact radius of nodes next to anchors
  double element_mass = 0.01;      // kg
  double damping = 0.05;           // N*s/m, axial relative velocity
  double spring_stiffness = 0.01;  // N/m
  bool inextensible = true;        // enforce segment lengths by projection

  void validate() const;  // throws InvalidParamsError
};

// Chain of point-mass nodes joined by segments. positions[0] is the winch
// exit end (root); positions.back() is the vehicle end (tip). The root
// segment rest length may be fractional in (0, element_length]; every other
// segment rests at exactly element_length.
struct TetherState {
  std::vector<Vec3> positions;
  std::vector<Vec3> velocities;
  std::vector<double> rest_lengths;
  bool root_anchored = true;
  bool tip_anchored = true;

  int node_count() const { return static_cast<int>(positions.size()); }
  int segment_count() const { return static_cast<int>(rest_lengths.size()); }
  double total_rest_length() const;
  bool node_pinned(int i) const {
    if (node_count() == 1) return root_anchored || tip_anchored;
    return (root_anchored && i == 0) ||
           (tip_anchored && i == node_count() - 1);
  }
};

// Number of segments a deployed length occupies, with the fractional-root
// convention: ceil(deployed / element_length), tolerant of float noise so
// exact multiples do not produce a spurious extra segment.
int segment_count_for(double deployed_length, double element_length);

// Per-node lumped masses: half an element per adjacent segment end, so the
// chain total is segment_count * element_mass exactly. A single detached
// node carries one full element mass.
std::vector<double> node_masses(const TetherState& s, const TetherParams& p);

// Chain initialized on the analytic hanging curve through root and tip (or
// on the straight segment when deployed_length cannot reach), at rest.
TetherState build_tether(const TetherParams& params, const Vec3& root,
                         const Vec3& tip, double deployed_length);

// One resolved node-obstacle contact, produced by the engine.
struct NodeContact {
  int node = 0;
  double depth = 0.0;
  Vec3 normal{0.0, 0.0, 1.0};
  double friction = 0.5;
};

struct ContactParams {
  double stiffness = 1000.0;  // N/m
  double damping = 10.0;      // N*s/m
};

// Gravity, axial spring/damper pairs, and penalty contact with Coulomb
// friction. Internal segment forces are exact action-reaction pairs.
std::vector<Vec3> accumulate_forces(const TetherState& s,
                                    const TetherParams& params, double gravity,
                                    const std::vector<NodeContact>& contacts,
                                    const ContactParams& contact_params);

// Semi-implicit Euler update of the free nodes; pinned nodes do not move.
void integrate_nodes(TetherState& s, const std::vector<Vec3>& forces,
                     const TetherParams& params, double dt);

// Impulses (N*s) the length constraints transmitted into the pinned ends
// during one projection call.
struct ProjectionReactions {
  Vec3 root{0.0, 0.0, 0.0};
  Vec3 tip{0.0, 0.0, 0.0};
};

// Iterative segment-length projection (compliant position-based constraint
// solve). With dt > 0 the position corrections are reflected into node
// velocities and constraint reactions on pinned ends are accumulated; with
// dt <= 0 only positions move and constraints are treated as rigid.
// Returns the largest relative segment stretch left after the budget.
double project_inextensible(TetherState& s, const TetherParams& params,
                            int iterations, double dt = 0.0,
                            ProjectionReactions* reactions = nullptr);

double kinetic_energy(const TetherState& s, const TetherParams& params);

}  // namespace marsupial
