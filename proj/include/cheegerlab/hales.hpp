// Copyright 2026 The cheegerlab Authors
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

#include <cstddef>
#include <span>
#include <vector>

#include "cheegerlab/arc_curve.hpp"
#include "cheegerlab/cheeger.hpp"

namespace cheegerlab {

// Nodes on a closed curve. Node i sits at the start of edge edge_index[i];
// indices are strictly increasing, so the node order follows the curve.
struct NodeSet {
  std::vector<Point> nodes;
  std::vector<bool> exceptional;
  std::vector<std::size_t> edge_index;

  std::size_t size() const { return nodes.size(); }
};

// Collapse points of the free arcs, plus one exceptional node for each
// curvature-h arc inside a border junction arc made of several segments.
NodeSet place_nodes(const OffsetResult& inner, const ArcDomain& d);
// Same, after checking that gamma_r is the inner Cheeger boundary of d.
NodeSet place_nodes(const ArcCurve& gamma_r, const ArcDomain& d);
// One node at the start of every edge.
NodeSet vertex_nodes(const ArcCurve& c);

// Signed area enclosed by a chain of edges closed by the chord back to its start.
double chord_deficit(std::span<const Edge> portion);

enum class ClampMode { scaled, literal };

struct DeficitReport {
  std::vector<double> per_arc_x;
  double truncated_T = 0.0;
  double clamp_bound = 1.0;
  bool clamp_active = false;
  std::size_t N = 0;
  std::size_t exceptional = 0;
  double length = 0.0;
  double area = 0.0;
  double r_star = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
};

// per_arc_x, truncated_T (clamped at ±clamp_bound) and N.
DeficitReport chord_deficits(const ArcCurve& gamma_r, const NodeSet& nodes,
                             double clamp_bound = 1.0);

// Hexagonal isoperimetric inequality for gamma_r scaled by 1/sqrt(πr*²).
// Throws PreconditionError when oriented_area(gamma_r) < πr*².
DeficitReport hales_check(const ArcCurve& gamma_r, const NodeSet& nodes, double r_star,
                          ClampMode mode = ClampMode::scaled);

inline constexpr double kHalesNodePenalty = 0.0505;

}  // namespace cheegerlab
