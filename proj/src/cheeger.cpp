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


#include "cheegerlab/cheeger.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cheegerlab/errors.hpp"

namespace cheegerlab {

namespace {

double eroded_area(const ConvexPolygon& p, double t) {
  const auto k = inner_parallel_polygon(p, t);
  return k ? k->area() : 0.0;
}

ArcCurve dilated_boundary(const ConvexPolygon& k, double r, EdgeRole flat_role,
                          std::vector<EdgeRole>& roles) {
  const std::size_t m = k.size();
  std::vector<Point> normal(m);
  for (std::size_t i = 0; i < m; ++i) {
    normal[i] = -perp(unit(k[(i + 1) % m] - k[i]));
  }
  std::vector<Edge> edges;
  edges.reserve(2 * m);
  roles.clear();
  for (std::size_t i = 0; i < m; ++i) {
    const Point nin = normal[(i + m - 1) % m];
    const Point nout = normal[i];
    edges.push_back(Edge::arc(k[i], r, angle_of(nin), angle_of(nout), 1));
    roles.push_back(EdgeRole::free_arc);
    const Point a = edges.back().end();
    const Point b = k[(i + 1) % m] + nout * r;
    edges.push_back(Edge::segment(a, b));
    roles.push_back(flat_role);
  }
  return ArcCurve(std::move(edges), true);
}

bool same_circle(const Arc& a, const Arc& b, double tol) {
  return a.turning == b.turning && distance(a.center, b.center) <= tol &&
         std::fabs(a.radius - b.radius) <= tol;
}

bool collinear(const Segment& a, const Segment& b, double tol) {
  const Point u = unit(a.end - a.start);
  return std::fabs(cross(u, b.start - a.start)) <= tol &&
         std::fabs(cross(u, b.end - a.start)) <= tol;
}

}  // namespace

CheegerResult cheeger_convex(const ConvexPolygon& p, double tol, EdgeRole flat_role) {
  if (!(tol > 0.0)) throw DomainError("solver tolerance must be positive");
  CheegerResult res;
  res.area = p.area();
  res.perimeter = p.perimeter();
  const double width = tol * std::sqrt(res.area);
  double lo = 0.0;
  double hi = 2.0 * res.area / res.perimeter;
  int it = 0;
  constexpr int kMaxIterations = 200;
  while (hi - lo > width) {
    if (++it > kMaxIterations) {
      std::ostringstream os;
      os.precision(17);
      os << "cheeger bisection did not converge: bracket [" << lo << ", " << hi << "]";
      throw SolverError(os.str());
    }
    const double mid = 0.5 * (lo + hi);
    const double g = eroded_area(p, mid) - kPi * mid * mid;
    if (g > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  res.iterations = it;
  res.bracket_lo = lo;
  res.bracket_hi = hi;
  res.r = 0.5 * (lo + hi);
  res.h = 1.0 / res.r;
  const auto k = inner_parallel_polygon(p, res.r);
  if (!k) throw SolverError("inner parallel set vanished at the Cheeger radius");
  res.residual = std::fabs(k->area() - kPi * res.r * res.r);
  res.cheeger_set_boundary = dilated_boundary(*k, res.r, flat_role, res.roles);
  return res;
}

double hexagon_constant() { return std::sqrt(kPi) + std::pow(12.0, 0.25); }

ArcDomain cheeger_set_domain(const CheegerResult& res) {
  return ArcDomain{res.cheeger_set_boundary, res.roles, res.h};
}

std::vector<RoleGroup> role_groups(std::span<const EdgeRole> roles) {
  std::vector<RoleGroup> groups;
  const std::size_t n = roles.size();
  if (n == 0) return groups;
  std::size_t start = 0;
  while (start < n && roles[start] == roles[(start + n - 1) % n]) ++start;
  if (start == n) {
    groups.push_back({roles[0], 0, n});
    return groups;
  }
  std::size_t i = start;
  std::size_t seen = 0;
  while (seen < n) {
    RoleGroup g{roles[i % n], i % n, 0};
    while (seen < n && roles[(g.first + g.count) % n] == g.role) {
      ++g.count;
      ++seen;
    }
    groups.push_back(g);
    i = g.first + g.count;
  }
  return groups;
}

StructureReport structure_report(const ArcDomain& d, const StructureOptions& opt) {
  StructureReport rep;
  auto flag = [&rep](const std::string& rule) {
    if (std::find(rep.violations.begin(), rep.violations.end(), rule) == rep.violations.end()) {
      rep.violations.push_back(rule);
    }
  };
  const ArcCurve& c = d.boundary;
  const std::size_t n = c.size();
  const bool h_ok = d.h > 0.0 && std::isfinite(d.h);
  if (!h_ok) flag("h_positive");
  if (!c.closed() || n == 0) flag("closed");
  if (n > opt.max_edges) flag("edge_cap");
  const bool labels_ok = d.roles.size() == n && n > 0;
  if (!labels_ok) flag("labels");

  if (c.closed() && n > 0) {
    rep.perimeter = curve_length(c);
    rep.area = signed_area(c);
    if (!(rep.area > 0.0)) flag("orientation");
    for (std::size_t i = 0; i < n; ++i) {
      const Point t0 = c[i].end_tangent();
      const Point t1 = c[(i + 1) % n].start_tangent();
      if (std::fabs(std::atan2(cross(t0, t1), dot(t0, t1))) > opt.tangent_tol) {
        flag("c1");
        break;
      }
    }
    if (h_ok && rep.area > 0.0 &&
        std::fabs(rep.perimeter / rep.area - d.h) > opt.self_ratio_tol * d.h) {
      flag("self_cheeger_ratio");
    }
  }

  if (labels_ok && h_ok) {
    const double r = d.r();
    const double len_tol = 1e-9 * std::max(rep.perimeter, r);
    bool all_free = true;
    for (std::size_t i = 0; i < n; ++i) {
      const Edge& e = c[i];
      switch (d.roles[i]) {
        case EdgeRole::free_arc:
          if (!e.is_arc() || e.as_arc().turning != 1 ||
              std::fabs(e.as_arc().radius - r) > opt.curvature_tol * r) {
            flag("free_curvature");
          }
          break;
        case EdgeRole::inner_junction:
          all_free = false;
          if (e.curvature() > d.h * (1.0 - opt.curvature_tol)) flag("inner_junction_curvature");
          break;
        case EdgeRole::border_junction:
          all_free = false;
          if (e.is_arc() && (e.as_arc().turning != 1 ||
                             std::fabs(e.as_arc().radius - r) > opt.curvature_tol * r)) {
            flag("border_junction_piece");
          }
          break;
      }
    }
    if (all_free) flag("ball");
    const auto groups = role_groups(d.roles);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const RoleGroup& grp = groups[g];
      if (grp.role == EdgeRole::free_arc) {
        ++rep.free_groups;
      } else {
        ++rep.junction_groups;
      }
      const RoleGroup& next = groups[(g + 1) % groups.size()];
      if (groups.size() < 2 || (grp.role != EdgeRole::free_arc && next.role != EdgeRole::free_arc)) {
        flag("alternation");
      }
      for (std::size_t k = 1; k < grp.count; ++k) {
        const Edge& a = c[(grp.first + k - 1) % n];
        const Edge& b = c[(grp.first + k) % n];
        if (grp.role == EdgeRole::free_arc) {
          if (a.is_arc() && b.is_arc() && !same_circle(a.as_arc(), b.as_arc(), len_tol)) {
            flag("free_arc_shape");
          }
        } else if (grp.role == EdgeRole::inner_junction) {
          const bool ok = (a.is_arc() && b.is_arc() && same_circle(a.as_arc(), b.as_arc(), len_tol)) ||
                          (a.is_segment() && b.is_segment() &&
                           collinear(a.as_segment(), b.as_segment(), len_tol));
          if (!ok) flag("inner_junction_shape");
        }
      }
      if (grp.role == EdgeRole::border_junction &&
          (!c[grp.first].is_segment() || !c[(grp.first + grp.count - 1) % n].is_segment())) {
        flag("border_junction_piece");
      }
    }
    if (rep.free_groups == 0) flag("alternation");
    if ((rep.free_groups + rep.junction_groups) % 2 != 0) flag("alternation");
  }
  rep.is_class_A = rep.violations.empty();

  if (labels_ok && h_ok && c.closed()) {
    try {
      const double r = d.r();
      const OffsetResult inner = offset_inner(c, r, d.h, d.roles);
      rep.inner_length = curve_length(inner.curve);
      rep.inner_area = oriented_area(inner.curve);
      double turning = 0.0;
      for (const Edge& e : c.edges()) {
        if (e.is_arc()) turning += e.as_arc().signed_sweep();
      }
      const double disk = kPi * r * r;
      rep.angle_rule_residual = (turning - kTwoPi) / kTwoPi;
      rep.perimeter_residual = (rep.perimeter - rep.inner_length - kTwoPi * r) / rep.perimeter;
      rep.area_residual = (rep.area - rep.inner_area - r * rep.inner_length - disk) / rep.area;
      rep.representation_residuals = {(rep.inner_area - disk) / disk,
                                      (rep.area - r * rep.inner_length - 2.0 * disk) / rep.area};
      rep.residuals_computed = true;
    } catch (const Error&) {
      rep.residuals_computed = false;
    }
  }
  return rep;
}

OffsetResult inner_cheeger_boundary(const ArcDomain& d, const StructureOptions& opt) {
  const StructureReport rep = structure_report(d, opt);
  if (!rep.is_class_A) {
    std::string msg = "domain is not admissible:";
    for (const auto& v : rep.violations) msg += " " + v;
    throw ValidationError(msg);
  }
  return offset_inner(d.boundary, d.r(), d.h, d.roles);
}

std::vector<StripArea> strip_areas(const ArcDomain& d, const OffsetResult& inner) {
  const ArcCurve& c = d.boundary;
  const std::size_t n = c.size();
  if (inner.source_to_output.size() != n) {
    throw ContractViolation("offset result does not match the domain");
  }
  const double r = d.r();
  std::vector<Point> img_start(n);
  std::vector<Point> img_end(n);
  std::vector<double> img_xdy(n, 0.0);
  std::size_t collapsed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const long j = inner.source_to_output[i];
    if (j < 0) {
      img_start[i] = img_end[i] = inner.collapse_points.at(collapsed++);
    } else {
      const Edge& e = inner.curve[static_cast<std::size_t>(j)];
      img_start[i] = e.start();
      img_end[i] = e.end();
      img_xdy[i] = e.x_dy();
    }
  }
  auto seg_xdy = [](Point a, Point b) { return 0.5 * (a.x + b.x) * (b.y - a.y); };
  std::vector<StripArea> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Edge& e = c[i];
    StripArea s;
    s.edge = i;
    if (e.is_segment()) {
      s.kind = "segment";
      s.closed_form = e.length() * r;
    } else {
      const Arc& a = e.as_arc();
      const double ang = a.sweep();
      if (inner.source_to_output[i] < 0) {
        s.kind = "collapsed";
        s.closed_form = 0.5 * ang * r * r;
      } else if (a.turning < 0) {
        s.kind = "concave";
        s.closed_form = ang * a.radius * r + 0.5 * ang * r * r;
      } else {
        s.kind = "convex";
        s.closed_form = ang * a.radius * r - 0.5 * ang * r * r;
      }
    }
    // S_i runs from the image start to the edge start, S_{i+1} likewise at the end.
    s.line_integral = e.x_dy() - img_xdy[i] + seg_xdy(img_start[i], e.start()) -
                      seg_xdy(img_end[i], e.end());
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace cheegerlab
