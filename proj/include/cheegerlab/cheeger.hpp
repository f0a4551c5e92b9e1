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

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "cheegerlab/arc_curve.hpp"
#include "cheegerlab/convex_polygon.hpp"

namespace cheegerlab {

struct CheegerResult {
  double h = 0.0;
  double r = 0.0;
  ArcCurve cheeger_set_boundary;
  // Role of each boundary edge: corner arcs are free, flat pieces carry
  // the role requested from cheeger_convex.
  std::vector<EdgeRole> roles;
  int iterations = 0;
  // |area(inner parallel set at r) - πr²|.
  double residual = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double area = 0.0;
  double perimeter = 0.0;
};

// Solves area(p eroded by r) = πr² by bisection; stops when the bracket is
// narrower than tol·sqrt(area(p)).
CheegerResult cheeger_convex(const ConvexPolygon& p, double tol = 1e-13,
                             EdgeRole flat_role = EdgeRole::border_junction);

// h of the unit-area regular hexagon.
double hexagon_constant();

// Boundary plus role labels and the claimed Cheeger constant. Not validated
// on construction; structure_report says whether it is admissible.
struct ArcDomain {
  ArcCurve boundary;
  std::vector<EdgeRole> roles;
  double h = 0.0;

  double r() const { return 1.0 / h; }
};

ArcDomain cheeger_set_domain(const CheegerResult& res);

struct StructureOptions {
  double curvature_tol = 1e-9;    // relative, against h
  double self_ratio_tol = 1e-9;   // relative |per/area - h|
  double tangent_tol = 1e-7;      // radians, C1 test at edge joins
  std::size_t max_edges = 10000;
};

// Maximal run of edges sharing a role, taken cyclically.
struct RoleGroup {
  EdgeRole role;
  std::size_t first = 0;
  std::size_t count = 0;
};

// Cyclic role runs; a run wrapping past the last edge starts at its first
// edge in traversal order. Empty when labels are missing or all equal.
std::vector<RoleGroup> role_groups(std::span<const EdgeRole> roles);

struct StructureReport {
  bool is_class_A = false;
  std::vector<std::string> violations;
  bool residuals_computed = false;
  double angle_rule_residual = 1.0;
  double perimeter_residual = 1.0;
  double area_residual = 1.0;
  std::array<double, 2> representation_residuals{1.0, 1.0};
  std::size_t free_groups = 0;
  std::size_t junction_groups = 0;
  double perimeter = 0.0;
  double area = 0.0;
  double inner_length = 0.0;
  double inner_area = 0.0;
};

StructureReport structure_report(const ArcDomain& d, const StructureOptions& opt = {});

// Throws ValidationError naming the failed rules when d is not admissible.
OffsetResult inner_cheeger_boundary(const ArcDomain& d, const StructureOptions& opt = {});

// Area of the region between an edge of the boundary and its image on the
// inner boundary, closed by the two normal segments at its ends.
struct StripArea {
  std::size_t edge = 0;
  std::string kind;  // "free", "concave", "convex", "segment"
  double closed_form = 0.0;
  double line_integral = 0.0;
};

std::vector<StripArea> strip_areas(const ArcDomain& d, const OffsetResult& inner);

}  // namespace cheegerlab
