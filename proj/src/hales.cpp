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


#include "cheegerlab/hales.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cheegerlab/errors.hpp"

namespace cheegerlab {

namespace {

double chord_x_dy(Point a, Point b) { return 0.5 * (a.x + b.x) * (b.y - a.y); }

bool curves_match(const ArcCurve& a, const ArcCurve& b) {
  if (a.size() != b.size() || a.closed() != b.closed()) return false;
  const double tol = std::max(a.tolerance(), b.tolerance()) * 10.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_arc() != b[i].is_arc()) return false;
    if (distance(a[i].start(), b[i].start()) > tol || distance(a[i].end(), b[i].end()) > tol) {
      return false;
    }
  }
  return true;
}

}  // namespace

NodeSet place_nodes(const OffsetResult& inner, const ArcDomain& d) {
  const std::size_t n = d.boundary.size();
  if (inner.source_to_output.size() != n || d.roles.size() != n) {
    throw ContractViolation("inner boundary does not match the domain");
  }
  const std::size_t m = inner.curve.size();
  if (m == 0) throw ContractViolation("inner boundary has no edges");

  // Border junction groups with at least two segments.
  std::vector<bool> multi_segment_group(n, false);
  for (const RoleGroup& g : role_groups(d.roles)) {
    if (g.role != EdgeRole::border_junction) continue;
    std::size_t segments = 0;
    for (std::size_t k = 0; k < g.count; ++k) segments += d.boundary[(g.first + k) % n].is_segment();
    if (segments < 2) continue;
    for (std::size_t k = 0; k < g.count; ++k) multi_segment_group[(g.first + k) % n] = true;
  }

  struct Raw {
    std::size_t edge;
    Point p;
    bool exceptional;
  };
  std::vector<Raw> raw;
  std::size_t collapsed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (inner.source_to_output[i] >= 0) continue;
    const Point p = inner.collapse_points.at(collapsed++);
    const EdgeRole role = d.roles[i];
    bool exceptional = false;
    if (role == EdgeRole::border_junction) {
      if (!multi_segment_group[i]) continue;
      exceptional = true;
    }
    // node sits where the next surviving image edge starts
    std::size_t j = (i + 1) % n;
    while (inner.source_to_output[j] < 0) {
      j = (j + 1) % n;
      if (j == i) throw ContractViolation("inner boundary collapsed entirely");
    }
    raw.push_back({static_cast<std::size_t>(inner.source_to_output[j]), p, exceptional});
  }
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) { return a.edge < b.edge; });
  NodeSet ns;
  for (const Raw& r : raw) {
    if (!ns.edge_index.empty() && ns.edge_index.back() == r.edge) {
      if (!r.exceptional) ns.exceptional.back() = false;
      continue;
    }
    ns.nodes.push_back(r.p);
    ns.exceptional.push_back(r.exceptional);
    ns.edge_index.push_back(r.edge);
  }
  return ns;
}

NodeSet place_nodes(const ArcCurve& gamma_r, const ArcDomain& d) {
  const OffsetResult inner = offset_inner(d.boundary, d.r(), d.h, d.roles);
  if (!curves_match(gamma_r, inner.curve)) {
    throw ContractViolation("curve is not the inner Cheeger boundary of the domain");
  }
  return place_nodes(inner, d);
}

NodeSet vertex_nodes(const ArcCurve& c) {
  NodeSet ns;
  for (std::size_t i = 0; i < c.size(); ++i) {
    ns.nodes.push_back(c[i].start());
    ns.exceptional.push_back(false);
    ns.edge_index.push_back(i);
  }
  return ns;
}

double chord_deficit(std::span<const Edge> portion) {
  if (portion.empty()) return 0.0;
  double x = 0.0;
  for (const Edge& e : portion) x += e.x_dy();
  return x + chord_x_dy(portion.back().end(), portion.front().start());
}

DeficitReport chord_deficits(const ArcCurve& gamma_r, const NodeSet& nodes, double clamp_bound) {
  if (!gamma_r.closed()) throw ContractViolation("deficits need a closed curve");
  if (nodes.size() == 0) throw ContractViolation("deficits need at least one node");
  if (nodes.edge_index.size() != nodes.size() || nodes.exceptional.size() != nodes.size()) {
    throw ContractViolation("node set fields have different lengths");
  }
  if (!(clamp_bound > 0.0)) throw DomainError("clamp bound must be positive");
  const std::size_t m = gamma_r.size();
  const double tol = 1e-9 * std::max(curve_length(gamma_r), 1e-300);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::size_t e = nodes.edge_index[i];
    if (e >= m || (i > 0 && e <= nodes.edge_index[i - 1])) {
      throw ContractViolation("node edge indices must be increasing and in range");
    }
    if (distance(gamma_r[e].start(), nodes.nodes[i]) > tol) {
      throw ContractViolation("node " + std::to_string(i) + " is not on the curve");
    }
  }
  DeficitReport rep;
  rep.clamp_bound = clamp_bound;
  rep.N = nodes.size();
  rep.exceptional = static_cast<std::size_t>(
      std::count(nodes.exceptional.begin(), nodes.exceptional.end(), true));
  const auto& edges = gamma_r.edges();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::size_t a = nodes.edge_index[i];
    const std::size_t b = nodes.edge_index[(i + 1) % nodes.size()];
    std::vector<Edge> portion;
    for (std::size_t k = a;; k = (k + 1) % m) {
      portion.push_back(edges[k]);
      if ((k + 1) % m == b) break;
    }
    const double x = chord_deficit(portion);
    rep.per_arc_x.push_back(x);
    if (std::fabs(x) > clamp_bound) rep.clamp_active = true;
    rep.truncated_T += std::clamp(x, -clamp_bound, clamp_bound);
  }
  return rep;
}

DeficitReport hales_check(const ArcCurve& gamma_r, const NodeSet& nodes, double r_star,
                          ClampMode mode) {
  if (!(r_star > 0.0)) throw DomainError("r_star must be positive");
  const double unit = kPi * r_star * r_star;
  const double area = oriented_area(gamma_r);
  if (area < unit * (1.0 - 1e-9)) {
    throw PreconditionError("oriented area of the curve is below πr*²; inequality not applicable");
  }
  DeficitReport rep = chord_deficits(gamma_r, nodes, mode == ClampMode::scaled ? unit : 1.0);
  const double q = std::pow(12.0, 0.25);
  rep.r_star = r_star;
  rep.area = area;
  rep.length = curve_length(gamma_r);
  rep.lhs = rep.length / std::sqrt(unit);
  rep.rhs = -(rep.truncated_T / unit) * q -
            (static_cast<double>(rep.N) - 6.0) * kHalesNodePenalty + 2.0 * q;
  rep.satisfied = rep.lhs >= rep.rhs - 1e-12;
  return rep;
}

}  // namespace cheegerlab
