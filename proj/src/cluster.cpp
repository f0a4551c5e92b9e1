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


#include "cheegerlab/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "cheegerlab/chamber.hpp"
#include "cheegerlab/errors.hpp"
#include "cheegerlab/parallel.hpp"

namespace cheegerlab {

namespace {

constexpr std::size_t kExterior = static_cast<std::size_t>(-1);

double cluster_scale(const Cluster& cl) {
  BoundingBox box;
  for (const Point& p : cl.container.vertices()) box.expand(p);
  return box.diagonal();
}

bool edges_shared(const Edge& a, const Edge& b, double tol) {
  if (a.is_arc() != b.is_arc()) return false;
  if (distance(a.start(), b.end()) > tol || distance(a.end(), b.start()) > tol) return false;
  if (a.is_arc()) {
    const Arc& x = a.as_arc();
    const Arc& y = b.as_arc();
    return x.turning == -y.turning && distance(x.center, y.center) <= tol &&
           std::fabs(x.radius - y.radius) <= tol;
  }
  return true;
}

void require_shared(const Cluster& cl, const SharedArc& s, double tol) {
  const std::size_t k = cl.k();
  if (s.cell_a >= k || s.cell_b >= k || s.cell_a == s.cell_b) {
    throw ValidationError("adjacency entry names an invalid cell pair");
  }
  const ArcDomain& a = cl.cells[s.cell_a];
  const ArcDomain& b = cl.cells[s.cell_b];
  if (s.edge_a >= a.boundary.size() || s.edge_b >= b.boundary.size()) {
    throw ValidationError("adjacency entry names an invalid edge");
  }
  if (a.roles.size() != a.boundary.size() || b.roles.size() != b.boundary.size() ||
      a.roles[s.edge_a] != EdgeRole::inner_junction || b.roles[s.edge_b] != EdgeRole::inner_junction) {
    throw ValidationError("adjacency entry does not join two inner junction edges");
  }
  if (!edges_shared(a.boundary[s.edge_a], b.boundary[s.edge_b], tol)) {
    throw ValidationError("arc " + std::to_string(s.edge_a) + " of cell " + std::to_string(s.cell_a) +
                          " is not shared with arc " + std::to_string(s.edge_b) + " of cell " +
                          std::to_string(s.cell_b));
  }
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Neighbor key per edge: kExterior for border pieces, the neighbor cell for
// inner junctions, absent for free arcs.
std::vector<std::vector<std::optional<std::size_t>>> edge_keys(const Cluster& cl) {
  std::vector<std::vector<std::optional<std::size_t>>> keys(cl.k());
  for (std::size_t j = 0; j < cl.k(); ++j) {
    const ArcDomain& d = cl.cells[j];
    if (d.roles.size() != d.boundary.size()) {
      throw ValidationError("cell " + std::to_string(j) + " has one role per edge missing");
    }
    keys[j].resize(d.boundary.size());
    for (std::size_t i = 0; i < d.roles.size(); ++i) {
      if (d.roles[i] == EdgeRole::border_junction) keys[j][i] = kExterior;
    }
  }
  for (const SharedArc& s : cl.adjacency) {
    auto& ka = keys[s.cell_a][s.edge_a];
    auto& kb = keys[s.cell_b][s.edge_b];
    if (ka || kb) throw ValidationError("an inner junction edge appears in two adjacency entries");
    ka = s.cell_b;
    kb = s.cell_a;
  }
  for (std::size_t j = 0; j < cl.k(); ++j) {
    for (std::size_t i = 0; i < keys[j].size(); ++i) {
      if (cl.cells[j].roles[i] == EdgeRole::inner_junction && !keys[j][i]) {
        throw ValidationError("inner junction edge " + std::to_string(i) + " of cell " +
                              std::to_string(j) + " has no neighbor");
      }
    }
  }
  return keys;
}

std::size_t count_junction_arcs(const std::vector<std::optional<std::size_t>>& keys) {
  const std::size_t n = keys.size();
  if (n == 0) return 0;
  std::size_t groups = 0;
  bool any_break = false;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& prev = keys[(i + n - 1) % n];
    const auto& cur = keys[i];
    if (cur && (!prev || *prev != *cur)) ++groups;
    if (!cur || !prev || *prev != *cur) any_break = true;
  }
  if (!any_break && keys[0]) return 1;
  return groups;
}

std::vector<BorderContact> border_runs(const ArcDomain& d, std::size_t cell) {
  std::vector<BorderContact> out;
  for (const RoleGroup& g : role_groups(d.roles)) {
    if (g.role == EdgeRole::border_junction) out.push_back({cell, g.first, g.count});
  }
  return out;
}

// Relabels flat pieces lying on the container boundary, and arcs between
// two such pieces, as border junction pieces.
void label_border(ArcDomain& d, const ConvexPolygon& container, double tol) {
  const std::size_t n = d.boundary.size();
  auto on_border = [&](Point p) {
    for (std::size_t i = 0; i < container.size(); ++i) {
      const Point a = container[i];
      const Point b = container[(i + 1) % container.size()];
      if (std::fabs(cross(unit(b - a), p - a)) <= tol) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Edge& e = d.boundary[i];
    if (e.is_segment() && on_border(e.point_at(0.5))) d.roles[i] = EdgeRole::border_junction;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d.boundary[i].is_arc() && d.roles[(i + n - 1) % n] == EdgeRole::border_junction &&
        d.roles[(i + 1) % n] == EdgeRole::border_junction && d.boundary[(i + n - 1) % n].is_segment() &&
        d.boundary[(i + 1) % n].is_segment()) {
      d.roles[i] = EdgeRole::border_junction;
    }
  }
}

// Pairs up coincident inner junction edges of different cells.
std::vector<SharedArc> match_shared(const std::vector<ArcDomain>& cells, double tol) {
  std::vector<SharedArc> out;
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t ea = 0; ea < cells[a].boundary.size(); ++ea) {
      if (cells[a].roles[ea] != EdgeRole::inner_junction) continue;
      for (std::size_t b = a + 1; b < cells.size(); ++b) {
        for (std::size_t eb = 0; eb < cells[b].boundary.size(); ++eb) {
          if (cells[b].roles[eb] != EdgeRole::inner_junction) continue;
          if (edges_shared(cells[a].boundary[ea], cells[b].boundary[eb], tol)) {
            out.push_back({a, ea, b, eb});
          }
        }
      }
    }
  }
  return out;
}

Cluster assemble(ConvexPolygon container, std::vector<ArcDomain> cells, double tol) {
  Cluster cl;
  cl.container = std::move(container);
  cl.domain_area = cl.container.area();
  for (ArcDomain& d : cells) label_border(d, cl.container, tol);
  cl.adjacency = match_shared(cells, tol);
  for (std::size_t j = 0; j < cells.size(); ++j) {
    for (const BorderContact& b : border_runs(cells[j], j)) cl.border_contacts.push_back(b);
  }
  cl.cells = std::move(cells);
  return cl;
}

ArcDomain translated(const ArcDomain& d, Point shift) {
  return ArcDomain{transformed(d.boundary, 1.0, 0.0, shift), d.roles, d.h};
}

Point hex_center(int q, int r) {
  const double s = unit_hexagon_side();
  return {s * std::sqrt(3.0) * (q + 0.5 * r), s * 1.5 * r};
}

Cluster hexagon_tiling(const std::vector<std::pair<int, int>>& axial) {
  const double s = unit_hexagon_side();
  const double tol = 1e-9;
  std::vector<Point> centers;
  for (const auto& [q, r] : axial) centers.push_back(hex_center(q, r));
  Cluster cl;
  std::vector<Point> all;
  for (std::size_t j = 0; j < centers.size(); ++j) {
    std::vector<Point> v;
    for (int i = 0; i < 6; ++i) v.push_back(centers[j] + polar(s, kPi / 6.0 + i * kPi / 3.0));
    all.insert(all.end(), v.begin(), v.end());
    ConvexPolygon tile(v);
    std::vector<EdgeRole> roles(6, EdgeRole::border_junction);
    for (int i = 0; i < 6; ++i) {
      const Point nb = centers[j] + polar(std::sqrt(3.0) * s, kPi / 3.0 + i * kPi / 3.0);
      for (std::size_t m = 0; m < centers.size(); ++m) {
        if (m != j && distance(centers[m], nb) < tol) {
          roles[i] = EdgeRole::inner_junction;
          if (m > j) cl.adjacency.push_back({j, static_cast<std::size_t>(i), m,
                                             static_cast<std::size_t>((i + 3) % 6)});
        }
      }
    }
    cl.cells.push_back(ArcDomain{tile.boundary(), roles, hexagon_constant()});
    cl.footprint.push_back(std::move(tile));
  }
  for (std::size_t j = 0; j < cl.cells.size(); ++j) {
    for (const BorderContact& b : border_runs(cl.cells[j], j)) cl.border_contacts.push_back(b);
  }
  cl.container = ConvexPolygon(convex_hull(all));
  cl.domain_area = static_cast<double>(cl.cells.size());
  return cl;
}

}  // namespace

double objective(const std::vector<double>& h, double p) {
  if (std::isnan(p) || p < 1.0) throw DomainError("objective exponent must satisfy p >= 1");
  if (h.empty()) throw DomainError("objective of an empty cluster");
  const double m = *std::max_element(h.begin(), h.end());
  if (std::isinf(p)) return m;
  if (!(m > 0.0)) throw DomainError("objective needs positive Cheeger constants");
  double s = 0.0;
  for (double x : h) s += std::pow(x / m, p);
  return m * std::pow(s, 1.0 / p);
}

double objective(const Cluster& cl, double p) {
  std::vector<double> h;
  h.reserve(cl.k());
  for (const ArcDomain& d : cl.cells) h.push_back(d.h);
  return objective(h, p);
}

double junction_curvature(double h_j, double area_j, double h_l, double area_l, double p) {
  if (!(h_j > 0.0) || !(area_j > 0.0) || !(h_l > 0.0) || !(area_l > 0.0)) {
    throw DomainError("junction curvature needs positive inputs");
  }
  if (!(p >= 1.0) || std::isinf(p)) throw DomainError("junction curvature needs finite p >= 1");
  const double num = std::pow(h_j, p) / area_j - std::pow(h_l, p) / area_l;
  const double den = std::pow(h_j, p - 1.0) / area_j + std::pow(h_l, p - 1.0) / area_l;
  const double K = num / den;
  if (!(K < h_j)) throw SolverError("junction curvature is not below h_j");
  return K;
}

ClusterCheck check_cluster(const Cluster& cl, int samples_per_edge) {
  ClusterCheck out;
  auto problem = [&out](std::string msg) {
    out.ok = false;
    out.problems.push_back(std::move(msg));
  };
  const double scale = cluster_scale(cl);
  const double tol = 1e-9 * scale;
  std::vector<BoundingBox> boxes;
  for (std::size_t j = 0; j < cl.k(); ++j) {
    const ArcDomain& d = cl.cells[j];
    if (!d.boundary.closed() || d.boundary.empty()) problem("cell " + std::to_string(j) + " is not closed");
    boxes.push_back(bounding_box(d.boundary));
  }
  if (!out.ok) return out;
  for (const SharedArc& s : cl.adjacency) {
    try {
      require_shared(cl, s, tol * 10.0);
    } catch (const ValidationError& e) {
      problem(e.what());
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> overlapping;
  bool outside = false;
  for (std::size_t a = 0; a < cl.k(); ++a) {
    for (const Edge& e : cl.cells[a].boundary.edges()) {
      for (int s = 0; s < samples_per_edge; ++s) {
        const Point p = e.point_at((s + 0.5) / samples_per_edge);
        if (!outside && !cl.container.contains(p, tol)) {
          outside = true;
          problem("cell " + std::to_string(a) + " leaves the container");
        }
        if (!cl.footprint.empty()) {
          bool in = false;
          for (const ConvexPolygon& t : cl.footprint) in = in || t.contains(p, tol);
          if (!in && !outside) {
            outside = true;
            problem("cell " + std::to_string(a) + " leaves the footprint");
          }
        }
        for (std::size_t b = 0; b < cl.k(); ++b) {
          if (b == a || overlapping.count({std::min(a, b), std::max(a, b)})) continue;
          const BoundingBox& bb = boxes[b];
          if (p.x < bb.lo.x - tol || p.x > bb.hi.x + tol || p.y < bb.lo.y - tol || p.y > bb.hi.y + tol) {
            continue;
          }
          const ArcCurve& other = cl.cells[b].boundary;
          if (distance_to_curve(other, p) <= std::max(tol, 10.0 * other.tolerance())) continue;
          if (winding_number(other, p) != 0) {
            overlapping.insert({std::min(a, b), std::max(a, b)});
            problem("cells " + std::to_string(a) + " and " + std::to_string(b) + " overlap");
          }
        }
      }
    }
  }
  return out;
}

CanonicalGraph canonical_graph(const Cluster& cl) {
  CanonicalGraph g;
  const std::size_t k = cl.k();
  const double tol = 1e-8 * cluster_scale(cl);
  for (const SharedArc& s : cl.adjacency) require_shared(cl, s, tol);
  const auto keys = edge_keys(cl);
  g.vertex_count = k + 1;
  for (const SharedArc& s : cl.adjacency) g.inner_edges.emplace_back(s.cell_a, s.cell_b);
  for (const BorderContact& b : cl.border_contacts) {
    if (b.cell >= k) throw ValidationError("border contact names an invalid cell");
    const ArcDomain& d = cl.cells[b.cell];
    if (b.edge_count == 0) throw ValidationError("border contact with no edges");
    for (std::size_t i = 0; i < b.edge_count; ++i) {
      const std::size_t e = (b.edge_first + i) % d.boundary.size();
      if (b.edge_first >= d.boundary.size() || d.roles[e] != EdgeRole::border_junction) {
        throw ValidationError("border contact of cell " + std::to_string(b.cell) +
                              " names a non-border edge");
      }
    }
    g.outer_edges.emplace_back(b.cell, k);
  }
  for (std::size_t j = 0; j < k; ++j) {
    g.lambda.push_back(count_junction_arcs(keys[j]));
    g.lambda_sum += g.lambda.back();
  }
  UnionFind uf(k + 1);
  for (const auto& [a, b] : g.inner_edges) uf.unite(a, b);
  for (const auto& [a, b] : g.outer_edges) uf.unite(a, b);
  std::set<std::size_t> roots;
  for (std::size_t v = 0; v <= k; ++v) roots.insert(uf.find(v));
  g.components = roots.size();
  g.connected = g.components == 1;
  const long V = static_cast<long>(g.vertex_count);
  const long E_in = static_cast<long>(g.inner_edges.size());
  const long E_out = static_cast<long>(g.outer_edges.size());
  const long E = E_in + E_out;
  // V - E + F = 1 + C for a planar graph with C components
  g.faces = E - V + 1 + static_cast<long>(g.components);
  g.euler_residual = V - E + g.faces - 1 - static_cast<long>(g.components);

  bool tiling = E_in > 0;
  for (const ArcDomain& d : cl.cells) {
    for (EdgeRole r : d.roles) tiling = tiling && r != EdgeRole::free_arc;
  }
  if (tiling) {
    std::vector<Point> ends;
    auto add = [&](Point p) {
      for (const Point& q : ends) {
        if (distance(p, q) <= tol) return;
      }
      ends.push_back(p);
    };
    for (const SharedArc& s : cl.adjacency) {
      const Edge& e = cl.cells[s.cell_a].boundary[s.edge_a];
      add(e.start());
      add(e.end());
    }
    g.enumerated_faces = static_cast<long>(ends.size());
    if (g.connected) g.euler_residual = V - E + *g.enumerated_faces - 2;
  }
  const long F = g.enumerated_faces.value_or(g.faces);
  g.count_identity = 2 * E_in + E_out == static_cast<long>(g.lambda_sum);
  g.faces_hypothesis = 2 * E >= 3 * F;
  g.count_lhs = static_cast<long>(g.lambda_sum) + E_out + 6;
  g.count_rhs = 6 * static_cast<long>(k);
  g.count_holds = g.count_lhs <= g.count_rhs;
  g.count_checked = g.connected && k >= 3;
  if (!g.connected) {
    g.diagnostics.push_back("graph is disconnected; Euler counting per component, count check skipped");
  }
  if (k <= 2) g.diagnostics.push_back("k <= 2: faces may have fewer than 3 edges; count reported only");
  if (!g.count_identity) g.diagnostics.push_back("2 E_in + E_out differs from the junction arc total");
  return g;
}

ChamberReport empty_chamber_report(const Cluster& cl) {
  ChamberReport rep;
  double cells = 0.0;
  double h_star = 0.0;
  for (const ArcDomain& d : cl.cells) {
    cells += signed_area(d.boundary);
    h_star = std::max(h_star, d.h);
  }
  rep.area = cl.domain_area - cells;
  if (h_star > 0.0) {
    rep.r_star = 1.0 / h_star;
    const ReferenceAreas ref = reference_areas(rep.r_star);
    const double k = static_cast<double>(cl.k());
    rep.bound = (2.0 * k - 2.0) * ref.delta + 3.0 * ref.corner;
  }
  rep.applicable = cl.claimed_optimal_in_triangle;
  rep.holds = rep.area >= rep.bound - 1e-12 * std::max(1.0, cl.domain_area);
  return rep;
}

double unit_hexagon_side() { return std::sqrt(2.0 / (3.0 * std::sqrt(3.0))); }

Cluster honeycomb_cluster(int l) {
  if (l < 1) throw DomainError("honeycomb needs l >= 1");
  std::vector<std::pair<int, int>> axial;
  for (int r = 0; r < l; ++r) {
    for (int q = 0; q < l - r; ++q) axial.emplace_back(q, r);
  }
  return hexagon_tiling(axial);
}

Cluster honeycomb_cell_cluster(const std::vector<std::pair<int, int>>& axial) {
  if (axial.empty()) throw ValidationError("k-cell needs at least one hexagon");
  std::set<std::pair<int, int>> cells(axial.begin(), axial.end());
  if (cells.size() != axial.size()) throw ValidationError("k-cell lists a hexagon twice");
  std::set<std::pair<int, int>> seen{axial.front()};
  std::queue<std::pair<int, int>> todo;
  todo.push(axial.front());
  const int dq[6] = {1, 0, -1, -1, 0, 1};
  const int dr[6] = {0, 1, 1, 0, -1, -1};
  while (!todo.empty()) {
    const auto [q, r] = todo.front();
    todo.pop();
    for (int i = 0; i < 6; ++i) {
      const std::pair<int, int> nb{q + dq[i], r + dr[i]};
      if (cells.count(nb) && !seen.count(nb)) {
        seen.insert(nb);
        todo.push(nb);
      }
    }
  }
  if (seen.size() != cells.size()) throw ValidationError("k-cell coordinates are not connected");
  return hexagon_tiling(axial);
}

Cluster four_subtriangle_cluster(double area) {
  const ConvexPolygon tri = equilateral_triangle(area);
  const Point A = tri[0], B = tri[1], C = tri[2];
  const Point ab = (A + B) * 0.5, bc = (B + C) * 0.5, ca = (C + A) * 0.5;
  std::vector<ArcDomain> cells;
  for (const auto& v : {std::vector<Point>{A, ab, ca}, std::vector<Point>{ab, B, bc},
                        std::vector<Point>{ca, bc, C}, std::vector<Point>{ab, bc, ca}}) {
    cells.push_back(cheeger_set_domain(cheeger_convex(ConvexPolygon(v), 1e-13, EdgeRole::inner_junction)));
  }
  const double tol = 1e-9 * distance(A, B);
  return assemble(tri, std::move(cells), tol);
}

Cluster square_grid_cluster(int n) {
  if (n < 1) throw DomainError("grid needs n >= 1");
  const ArcDomain unit = cheeger_set_domain(cheeger_convex(unit_square(), 1e-13, EdgeRole::inner_junction));
  std::vector<ArcDomain> cells;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) cells.push_back(translated(unit, {double(i), double(j)}));
  }
  const double s = n;
  return assemble(ConvexPolygon({{0, 0}, {s, 0}, {s, s}, {0, s}}), std::move(cells), 1e-9 * s);
}

Cluster single_triangle_cluster(double area) {
  const ConvexPolygon tri = equilateral_triangle(area);
  std::vector<ArcDomain> cells{cheeger_set_domain(cheeger_convex(tri, 1e-13, EdgeRole::inner_junction))};
  return assemble(tri, std::move(cells), 1e-9 * std::sqrt(area));
}

double certified_lower_bound(std::size_t k, double area) {
  if (!(area > 0.0) || k == 0) throw DomainError("lower bound needs k >= 1 and positive area");
  return hexagon_constant() * std::sqrt(static_cast<double>(k) / area);
}

Certificate lower_bound_certificate(const Cluster& cl, ClampMode mode) {
  Certificate c;
  c.k = cl.k();
  if (c.k == 0) throw ValidationError("certificate of an empty cluster");
  c.domain_area = cl.domain_area;
  for (const ArcDomain& d : cl.cells) c.h_star = std::max(c.h_star, d.h);
  if (!(c.h_star > 0.0)) throw ValidationError("cells need positive Cheeger constants");
  c.r_star = 1.0 / c.h_star;
  const double kd = static_cast<double>(c.k);
  c.objective = objective(cl, std::numeric_limits<double>::infinity());
  c.scaled_objective = std::sqrt(c.domain_area / kd) * c.objective;
  c.ratio = c.scaled_objective / hexagon_constant();
  c.certified_lower_bound = certified_lower_bound(c.k, c.domain_area);

  std::optional<CanonicalGraph> graph;
  try {
    graph = canonical_graph(cl);
  } catch (const ValidationError& e) {
    c.failing_rules.push_back(std::string("graph: ") + e.what());
  }

  c.per_cell.resize(c.k);
  parallel_for(c.k, [&](std::size_t j) {
    const ArcDomain& d = cl.cells[j];
    CellCertificate& cc = c.per_cell[j];
    cc.cell = j;
    cc.h = d.h;
    cc.structure = structure_report(d);
    cc.area = cc.structure.area;
    cc.perimeter = cc.structure.perimeter;
    if (graph) cc.lambda = graph->lambda[j];
    if (!cc.structure.residuals_computed) {
      cc.error = "inner Cheeger boundary unavailable";
      return;
    }
    cc.inner_length = cc.structure.inner_length;
    cc.inner_area = cc.structure.inner_area;
    cc.step1_lhs = c.h_star * c.h_star * cc.area;
    cc.step1_rhs = c.h_star * cc.inner_length + kTwoPi;
    cc.step1_holds = cc.step1_lhs >= cc.step1_rhs * (1.0 - 1e-9);
    cc.largest_root = cc.inner_length / cc.area;
    cc.largest_root_holds = d.h > cc.largest_root;
    if (!cc.structure.is_class_A) {
      cc.error = "not admissible";
      return;
    }
    try {
      const OffsetResult inner = offset_inner(d.boundary, d.r(), d.h, d.roles);
      cc.hales = hales_check(inner.curve, place_nodes(inner, d), c.r_star, mode);
    } catch (const Error& e) {
      cc.error = e.what();
    }
  });

  bool all_ready = graph.has_value();
  for (const CellCertificate& cc : c.per_cell) {
    for (const std::string& v : cc.structure.violations) {
      c.failing_rules.push_back("cell " + std::to_string(cc.cell) + ": " + v);
    }
    if (!cc.hales) {
      all_ready = false;
      if (cc.structure.is_class_A) c.failing_rules.push_back("cell " + std::to_string(cc.cell) + ": " + cc.error);
      continue;
    }
    c.sum_area += cc.area;
    c.sum_inner_length += cc.inner_length;
    c.sum_T += cc.hales->truncated_T;
    c.sum_N += static_cast<long>(cc.hales->N);
    if (!cc.hales->satisfied) c.failing_rules.push_back("cell " + std::to_string(cc.cell) + ": hales");
  }
  if (!all_ready) {
    c.sum_area = 0.0;
    for (const ArcDomain& d : cl.cells) c.sum_area += signed_area(d.boundary);
  }
  if (graph) {
    c.sum_lambda = static_cast<long>(graph->lambda_sum);
    if (!graph->count_identity) c.failing_rules.push_back("graph: count identity");
  }
  c.applicable = all_ready && c.failing_rules.empty();

  const double q = std::pow(12.0, 0.25);
  const double tol = 1e-12;
  c.deficit_sign_holds = c.sum_T <= tol * std::max(1.0, c.domain_area);
  c.node_count_holds = c.sum_N <= c.sum_lambda + 3;
  c.mean6_holds = c.sum_N <= 6 * static_cast<long>(c.k);
  c.endstep2_lhs = c.h_star * c.h_star * c.sum_area;
  c.endstep2_rhs = c.h_star * c.sum_inner_length + kTwoPi * kd;
  c.endstep2_holds = c.endstep2_lhs >= c.endstep2_rhs * (1.0 - 1e-9);
  c.boundbelow_rhs = kd * (2.0 * std::sqrt(kPi) * q + kTwoPi);
  c.boundbelow_holds = c.endstep2_rhs >= c.boundbelow_rhs * (1.0 - 1e-12);
  c.chamber = empty_chamber_report(cl);
  c.boundabove_rhs = c.h_star * c.h_star * c.domain_area - kd * (2.0 * std::sqrt(3.0) - kPi);
  c.boundabove_holds = c.endstep2_lhs <= c.boundabove_rhs * (1.0 + 1e-12);
  c.final_lhs = c.domain_area / kd * c.h_star * c.h_star;
  c.final_rhs = kPi + 2.0 * std::sqrt(3.0) + 2.0 * std::sqrt(kPi) * q;
  c.holds = c.final_lhs >= c.final_rhs * (1.0 - tol);
  return c;
}

}  // namespace cheegerlab
