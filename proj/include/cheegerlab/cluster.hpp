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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cheegerlab/cheeger.hpp"
#include "cheegerlab/convex_polygon.hpp"
#include "cheegerlab/hales.hpp"

namespace cheegerlab {

struct SharedArc {
  std::size_t cell_a = 0;
  std::size_t edge_a = 0;
  std::size_t cell_b = 0;
  std::size_t edge_b = 0;
};

struct BorderContact {
  std::size_t cell = 0;
  std::size_t edge_first = 0;
  std::size_t edge_count = 1;
};

struct Cluster {
  ConvexPolygon container;
  // Area of the partitioned region: the container area for a triangle,
  // the union of the hexagon tiles for a k-triangle or k-cell.
  double domain_area = 0.0;
  std::vector<ArcDomain> cells;
  std::vector<SharedArc> adjacency;
  std::vector<BorderContact> border_contacts;
  bool claimed_optimal_in_triangle = false;
  // Hexagon tiles of a k-triangle or k-cell, when the region is a tiling.
  std::vector<ConvexPolygon> footprint;

  std::size_t k() const { return cells.size(); }
};

// p = infinity gives the max; p < 1 throws DomainError.
double objective(const Cluster& cl, double p);
double objective(const std::vector<double>& h, double p);

// Curvature of the junction arc between cells j and l from the first-order
// optimality conditions of the p-problem.
double junction_curvature(double h_j, double area_j, double h_l, double area_l, double p);

struct ClusterCheck {
  bool ok = true;
  std::vector<std::string> problems;
};

// Sampled disjointness and containment, plus the geometric sharing of every
// adjacency entry. Reports rather than throws.
ClusterCheck check_cluster(const Cluster& cl, int samples_per_edge = 64);

struct CanonicalGraph {
  std::size_t vertex_count = 0;  // k + 1, the exterior vertex has index k
  std::vector<std::pair<std::size_t, std::size_t>> inner_edges;
  std::vector<std::pair<std::size_t, std::size_t>> outer_edges;
  std::vector<std::size_t> lambda;
  std::size_t lambda_sum = 0;
  std::size_t components = 0;
  bool connected = false;
  long faces = 0;  // from Euler's formula
  // Independent face count for tilings: distinct endpoints of the inner
  // junction arcs. Absent when the cells have free arcs.
  std::optional<long> enumerated_faces;
  long euler_residual = 0;
  bool count_identity = false;  // 2 E_in + E_out = ΣΛ
  bool faces_hypothesis = false;  // 2E ≥ 3F
  bool count_checked = false;     // false when disconnected or k ≤ 2
  long count_lhs = 0;             // ΣΛ + E_out + 6
  long count_rhs = 0;             // 6k
  bool count_holds = false;
  std::vector<std::string> diagnostics;
};

// Throws ValidationError when an adjacency entry does not name a shared arc.
CanonicalGraph canonical_graph(const Cluster& cl);

struct ChamberReport {
  double area = 0.0;
  double bound = 0.0;
  double r_star = 0.0;
  bool applicable = false;
  bool holds = false;
};
ChamberReport empty_chamber_report(const Cluster& cl);

// Triangular arrangement of l(l+1)/2 unit-area pointy-top hexagons.
Cluster honeycomb_cluster(int l);
// Connected k-cell from axial lattice coordinates (q, r).
Cluster honeycomb_cell_cluster(const std::vector<std::pair<int, int>>& axial);
// Side of the unit-area regular hexagon.
double unit_hexagon_side();

// Cheeger sets of the four congruent subtriangles of an equilateral
// triangle of the given area, labeled as an admissible cluster.
Cluster four_subtriangle_cluster(double area = 1.0);
// Cheeger sets of the unit squares tiling [0, n]².
Cluster square_grid_cluster(int n);
// Single cell: the Cheeger set of the container triangle.
Cluster single_triangle_cluster(double area = 1.0);

struct CellCertificate {
  std::size_t cell = 0;
  double h = 0.0;
  double area = 0.0;
  double perimeter = 0.0;
  double inner_length = 0.0;
  double inner_area = 0.0;
  StructureReport structure;
  double step1_lhs = 0.0;  // h*² |Ω_j|
  double step1_rhs = 0.0;  // h* H¹(Γ_rj) + 2π
  bool step1_holds = false;
  double largest_root = 0.0;  // H¹(Γ_rj) / |Ω_j|
  bool largest_root_holds = false;
  std::optional<DeficitReport> hales;
  std::size_t lambda = 0;
  std::string error;
};

struct Certificate {
  bool applicable = false;
  std::vector<std::string> failing_rules;
  std::size_t k = 0;
  double domain_area = 0.0;
  double h_star = 0.0;
  double r_star = 0.0;
  double objective = 0.0;
  double scaled_objective = 0.0;  // sqrt(area / k) · h*
  double ratio = 0.0;             // scaled_objective / h(H)
  double certified_lower_bound = 0.0;
  std::vector<CellCertificate> per_cell;
  double sum_area = 0.0;
  double sum_inner_length = 0.0;
  double sum_T = 0.0;
  long sum_N = 0;
  long sum_lambda = 0;
  bool deficit_sign_holds = false;
  bool node_count_holds = false;  // ΣN ≤ ΣΛ + 3
  bool mean6_holds = false;       // ΣN ≤ 6k
  double endstep2_lhs = 0.0;
  double endstep2_rhs = 0.0;
  bool endstep2_holds = false;
  double boundbelow_rhs = 0.0;
  bool boundbelow_holds = false;
  ChamberReport chamber;
  double boundabove_rhs = 0.0;
  bool boundabove_holds = false;
  double final_lhs = 0.0;
  double final_rhs = 0.0;
  bool holds = false;
};

Certificate lower_bound_certificate(const Cluster& cl, ClampMode mode = ClampMode::scaled);

// h(H) sqrt(k / area): the certified lower bound on M_k for a triangle.
double certified_lower_bound(std::size_t k, double area);

}  // namespace cheegerlab
