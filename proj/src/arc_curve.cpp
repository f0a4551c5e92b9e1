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


#include "cheegerlab/arc_curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cheegerlab/errors.hpp"

namespace cheegerlab {

namespace {

constexpr double kAngleSlack = 1e-12;

Point rotate(Point p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Direction-angle change of (p - q) along an arc piece, by the chord plus a
// full turn when q sits inside the circular segment cut off by that chord.
double arc_piece_angle(const Arc& a, Point q, double phi0, double dphi, int depth) {
  const Point A = a.point_at_angle(phi0);
  const Point B = a.point_at_angle(phi0 + dphi);
  const Point u = A - q;
  const Point v = B - q;
  const double chord = std::atan2(cross(u, v), dot(u, v));
  if ((std::fabs(dphi) <= 0.5 * kPi && std::fabs(chord) < 0.75 * kPi) || depth > 60) {
    const Point M = a.point_at_angle(phi0 + 0.5 * dphi);
    const double side_q = cross(B - A, q - A);
    const double side_m = cross(B - A, M - A);
    const bool inside = norm(q - a.center) < a.radius && side_q * side_m > 0.0;
    return chord + (inside ? std::copysign(kTwoPi, dphi) : 0.0);
  }
  const double half = 0.5 * dphi;
  return arc_piece_angle(a, q, phi0, half, depth + 1) +
         arc_piece_angle(a, q, phi0 + half, half, depth + 1);
}

}  // namespace

double Arc::sweep() const {
  const double d = turning * (end_angle - start_angle);
  if (d > 0.0 && d <= kTwoPi * (1.0 + kAngleSlack)) return std::min(d, kTwoPi);
  const double w = wrap_angle(d);
  return w == 0.0 ? kTwoPi : w;
}

bool Arc::spans(double angle) const {
  const double offset =
      turning > 0 ? wrap_angle(angle - start_angle) : wrap_angle(start_angle - angle);
  return offset <= sweep() + kAngleSlack || offset >= kTwoPi - kAngleSlack;
}

Edge Edge::arc(Point center, double radius, double start_angle, double end_angle,
               int turning) {
  if (!(radius > 0.0) || !std::isfinite(radius) || !is_finite(center) ||
      !std::isfinite(start_angle) || !std::isfinite(end_angle)) {
    throw ValidationError("arc needs a finite center, angles and a positive radius");
  }
  if (turning != 1 && turning != -1) {
    throw ValidationError("arc turning must be +1 or -1");
  }
  return Edge(Arc{center, radius, start_angle, end_angle, turning});
}

Edge Edge::arc_by_sweep(Point center, double radius, double start_angle,
                        double signed_sweep) {
  if (signed_sweep == 0.0) throw ValidationError("arc with zero sweep");
  return arc(center, radius, start_angle, start_angle + signed_sweep,
             signed_sweep > 0.0 ? 1 : -1);
}

Edge Edge::segment(Point start, Point end) {
  if (!is_finite(start) || !is_finite(end)) {
    throw ValidationError("segment endpoints must be finite");
  }
  if (start == end) throw ValidationError("segment with coincident endpoints");
  return Edge(Segment{start, end});
}

Point Edge::start() const {
  return is_arc() ? as_arc().start() : as_segment().start;
}

Point Edge::end() const { return is_arc() ? as_arc().end() : as_segment().end; }

double Edge::length() const {
  if (is_arc()) return as_arc().radius * as_arc().sweep();
  return distance(as_segment().start, as_segment().end);
}

double Edge::curvature() const {
  if (is_segment()) return 0.0;
  return as_arc().turning / as_arc().radius;
}

double Edge::x_dy() const {
  if (is_segment()) {
    const Segment& s = as_segment();
    return 0.5 * (s.start.x + s.end.x) * (s.end.y - s.start.y);
  }
  const Arc& a = as_arc();
  const double p0 = a.start_angle;
  const double p1 = a.start_angle + a.signed_sweep();
  const double R = a.radius;
  return a.center.x * R * (std::sin(p1) - std::sin(p0)) +
         0.5 * R * R * ((p1 - p0) + 0.5 * (std::sin(2.0 * p1) - std::sin(2.0 * p0)));
}

Point Edge::point_at(double s) const {
  if (is_segment()) {
    const Segment& seg = as_segment();
    return seg.start + (seg.end - seg.start) * s;
  }
  const Arc& a = as_arc();
  return a.point_at_angle(a.start_angle + s * a.signed_sweep());
}

Point Edge::start_tangent() const {
  if (is_segment()) return unit(as_segment().end - as_segment().start);
  const Arc& a = as_arc();
  return perp(polar(1.0, a.start_angle)) * static_cast<double>(a.turning);
}

Point Edge::end_tangent() const {
  if (is_segment()) return unit(as_segment().end - as_segment().start);
  const Arc& a = as_arc();
  return perp(polar(1.0, a.start_angle + a.signed_sweep())) *
         static_cast<double>(a.turning);
}

double Edge::distance_to(Point q) const {
  if (is_segment()) {
    const Segment& s = as_segment();
    const Point d = s.end - s.start;
    const double t = std::clamp(dot(q - s.start, d) / dot(d, d), 0.0, 1.0);
    return distance(q, s.start + d * t);
  }
  const Arc& a = as_arc();
  const Point rel = q - a.center;
  const double rho = norm(rel);
  if (rho > 0.0 && a.spans(angle_of(rel))) return std::fabs(rho - a.radius);
  if (rho == 0.0) return a.radius;
  return std::min(distance(q, a.start()), distance(q, a.end()));
}

double Edge::subtended_angle(Point q) const {
  if (is_segment()) {
    const Point u = as_segment().start - q;
    const Point v = as_segment().end - q;
    return std::atan2(cross(u, v), dot(u, v));
  }
  const Arc& a = as_arc();
  return arc_piece_angle(a, q, a.start_angle, a.signed_sweep(), 0);
}

Edge Edge::reversed() const {
  if (is_segment()) return Edge(Segment{as_segment().end, as_segment().start});
  const Arc& a = as_arc();
  const double end = a.start_angle + a.signed_sweep();
  return Edge(Arc{a.center, a.radius, end, a.start_angle, -a.turning});
}

Edge Edge::transformed(double scale, double rotation, Point shift) const {
  if (!(scale > 0.0)) throw DomainError("transform scale must be positive");
  if (is_segment()) {
    return Edge(Segment{rotate(as_segment().start, rotation) * scale + shift,
                        rotate(as_segment().end, rotation) * scale + shift});
  }
  const Arc& a = as_arc();
  return Edge(Arc{rotate(a.center, rotation) * scale + shift, a.radius * scale,
                  a.start_angle + rotation, a.end_angle + rotation, a.turning});
}

void Edge::expand(BoundingBox& box) const {
  box.expand(start());
  box.expand(end());
  if (is_segment()) return;
  const Arc& a = as_arc();
  for (int k = 0; k < 4; ++k) {
    const double angle = 0.5 * kPi * k;
    if (a.spans(angle)) box.expand(a.point_at_angle(angle));
  }
}

ArcCurve::ArcCurve(std::vector<Edge> edges, bool closed)
    : edges_(std::move(edges)), closed_(closed) {
  double length = 0.0;
  for (const Edge& e : edges_) length += e.length();
  tolerance_ = std::max(1e-9 * length, 1e-300);
  for (std::size_t i = 0; i + 1 < edges_.size(); ++i) {
    const double gap = distance(edges_[i].end(), edges_[i + 1].start());
    if (gap > tolerance_) {
      throw ValidationError("curve has a gap of " + std::to_string(gap) +
                            " between edges " + std::to_string(i) + " and " +
                            std::to_string(i + 1));
    }
  }
  if (closed_ && !edges_.empty()) {
    const double gap = distance(edges_.back().end(), edges_.front().start());
    if (gap > tolerance_) {
      throw ValidationError("closed curve does not return to its start (gap " +
                            std::to_string(gap) + ")");
    }
  }
}

double curve_length(const ArcCurve& c) {
  double total = 0.0;
  for (const Edge& e : c.edges()) total += e.length();
  return total;
}

double signed_area(const ArcCurve& c) {
  if (!c.closed()) throw ContractViolation("signed_area needs a closed curve");
  double total = 0.0;
  for (const Edge& e : c.edges()) total += e.x_dy();
  return total;
}

double oriented_area(const ArcCurve& c) { return signed_area(c); }

double distance_to_curve(const ArcCurve& c, Point q) {
  double best = 1e300;
  for (const Edge& e : c.edges()) best = std::min(best, e.distance_to(q));
  return best;
}

int winding_number(const ArcCurve& c, Point q) {
  if (!c.closed()) throw ContractViolation("winding_number needs a closed curve");
  if (c.empty()) return 0;
  if (distance_to_curve(c, q) <= c.tolerance()) {
    throw OnBoundaryError("query point lies on the curve");
  }
  double total = 0.0;
  for (const Edge& e : c.edges()) total += e.subtended_angle(q);
  return static_cast<int>(std::lround(total / kTwoPi));
}

BoundingBox bounding_box(const ArcCurve& c) {
  BoundingBox box;
  for (const Edge& e : c.edges()) e.expand(box);
  return box;
}

ArcCurve reversed(const ArcCurve& c) {
  std::vector<Edge> out;
  out.reserve(c.size());
  for (auto it = c.edges().rbegin(); it != c.edges().rend(); ++it) {
    out.push_back(it->reversed());
  }
  return ArcCurve(std::move(out), c.closed());
}

ArcCurve transformed(const ArcCurve& c, double scale, double rotation, Point shift) {
  std::vector<Edge> out;
  out.reserve(c.size());
  for (const Edge& e : c.edges()) out.push_back(e.transformed(scale, rotation, shift));
  return ArcCurve(std::move(out), c.closed());
}

ArcCurve polygon_curve(std::span<const Point> vertices) {
  std::vector<Edge> edges;
  edges.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    edges.push_back(Edge::segment(vertices[i], vertices[(i + 1) % vertices.size()]));
  }
  return ArcCurve(std::move(edges), true);
}

ArcCurve circle_curve(Point center, double radius, int turning) {
  return ArcCurve({Edge::arc(center, radius, 0.0, turning * kTwoPi, turning)}, true);
}

const char* role_name(EdgeRole role) {
  switch (role) {
    case EdgeRole::free_arc:
      return "free";
    case EdgeRole::inner_junction:
      return "inner_junction";
    case EdgeRole::border_junction:
      return "border_junction";
  }
  return "?";
}

std::optional<EdgeRole> role_from_name(std::string_view name) {
  if (name == "free") return EdgeRole::free_arc;
  if (name == "inner_junction") return EdgeRole::inner_junction;
  if (name == "border_junction") return EdgeRole::border_junction;
  return std::nullopt;
}

OffsetResult offset_inner(const ArcCurve& c, double r, double h,
                          std::span<const EdgeRole> roles) {
  if (roles.size() != c.size()) {
    throw ContractViolation("offset_inner needs one role label per edge");
  }
  if (!c.closed()) throw ContractViolation("offset_inner needs a closed curve");
  if (!(r > 0.0) || !(h > 0.0) || std::fabs(r * h - 1.0) > 1e-9) {
    throw ContractViolation("offset_inner needs r = 1/h > 0");
  }
  OffsetResult result;
  result.source_to_output.assign(c.size(), -1);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Edge& e = c[i];
    const EdgeRole role = roles[i];
    if (e.is_segment()) {
      if (role == EdgeRole::free_arc) {
        throw ContractViolation("edge " + std::to_string(i) + " is labeled free but is a segment");
      }
      const Segment& s = e.as_segment();
      const Point shift = perp(unit(s.end - s.start)) * r;
      result.source_to_output[i] = static_cast<long>(out.size());
      out.push_back(Edge::segment(s.start + shift, s.end + shift));
      continue;
    }
    const Arc& a = e.as_arc();
    const bool radius_r = a.turning > 0 && std::fabs(a.radius - r) <= 1e-9 * r;
    if (role == EdgeRole::free_arc && !radius_r) {
      throw ContractViolation("free arc " + std::to_string(i) +
                              " must be counterclockwise with radius 1/h");
    }
    if (radius_r && role != EdgeRole::inner_junction) {
      result.collapsed_indices.push_back(i);
      result.collapse_points.push_back(a.center);
      continue;
    }
    double radius = a.radius;
    if (a.turning < 0) {
      radius += r;
    } else {
      radius -= r;
      if (radius <= 1e-12 * r) {
        throw DegenerateOffsetError("arc " + std::to_string(i) +
                                    " has radius <= 1/h; inner offset degenerates");
      }
    }
    result.source_to_output[i] = static_cast<long>(out.size());
    out.push_back(Edge::arc(a.center, radius, a.start_angle, a.end_angle, a.turning));
  }
  result.curve = ArcCurve(std::move(out), true);
  return result;
}

}  // namespace cheegerlab
