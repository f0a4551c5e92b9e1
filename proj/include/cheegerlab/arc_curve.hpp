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
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "cheegerlab/geometry.hpp"

namespace cheegerlab {

// Circular arc stored by angles and turning direction. A full circle is
// start_angle = a, end_angle = a + 2π.
struct Arc {
  Point center;
  double radius = 1.0;
  double start_angle = 0.0;
  double end_angle = 0.0;
  int turning = 1;  // +1 counterclockwise, -1 clockwise

  // Opening angle in (0, 2π].
  double sweep() const;
  double signed_sweep() const { return turning * sweep(); }
  Point point_at_angle(double angle) const { return center + polar(radius, angle); }
  Point start() const { return point_at_angle(start_angle); }
  Point end() const { return point_at_angle(start_angle + signed_sweep()); }
  // True when the direction `angle` (from the center) lies on the arc.
  bool spans(double angle) const;
};

struct Segment {
  Point start;
  Point end;
};

class Edge {
 public:
  static Edge arc(Point center, double radius, double start_angle, double end_angle,
                  int turning);
  // Arc from `start_angle` sweeping by `signed_sweep` (sign gives turning).
  static Edge arc_by_sweep(Point center, double radius, double start_angle,
                           double signed_sweep);
  static Edge segment(Point start, Point end);

  bool is_arc() const { return std::holds_alternative<Arc>(geom_); }
  bool is_segment() const { return !is_arc(); }
  const Arc& as_arc() const { return std::get<Arc>(geom_); }
  const Segment& as_segment() const { return std::get<Segment>(geom_); }

  Point start() const;
  Point end() const;
  double length() const;
  // Algebraic curvature seen from the left of the traversal: +1/R for a
  // counterclockwise arc, -1/R for a clockwise arc, 0 for a segment.
  double curvature() const;
  // Closed form of ∫ x dy along the edge.
  double x_dy() const;
  // Point at normalized parameter s in [0, 1].
  Point point_at(double s) const;
  Point start_tangent() const;
  Point end_tangent() const;
  double distance_to(Point q) const;
  // Total change of the direction angle of (p - q) along the edge.
  double subtended_angle(Point q) const;
  Edge reversed() const;
  // Image under p -> scale * R(rotation) p + shift.
  Edge transformed(double scale, double rotation, Point shift) const;
  void expand(BoundingBox& box) const;

 private:
  explicit Edge(std::variant<Arc, Segment> g) : geom_(g) {}
  std::variant<Arc, Segment> geom_;
};

// Ordered chain of edges. Construction checks that consecutive endpoints
// agree to within 1e-9 of the curve length (and closure, when closed).
class ArcCurve {
 public:
  ArcCurve() = default;
  ArcCurve(std::vector<Edge> edges, bool closed);

  const std::vector<Edge>& edges() const { return edges_; }
  bool closed() const { return closed_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const Edge& operator[](std::size_t i) const { return edges_[i]; }

  // Absolute tolerance used for endpoint coincidence on this curve.
  double tolerance() const { return tolerance_; }

 private:
  std::vector<Edge> edges_;
  bool closed_ = true;
  double tolerance_ = 1e-12;
};

double curve_length(const ArcCurve& c);
// ∫_c x dy; positive for counterclockwise Jordan curves.
double signed_area(const ArcCurve& c);
int winding_number(const ArcCurve& c, Point q);
// Winding-index weighted area Σ m(U)|U|; equal to signed_area by Green's
// theorem, so no arrangement is ever built.
double oriented_area(const ArcCurve& c);
double distance_to_curve(const ArcCurve& c, Point q);
BoundingBox bounding_box(const ArcCurve& c);
ArcCurve reversed(const ArcCurve& c);
ArcCurve transformed(const ArcCurve& c, double scale, double rotation, Point shift);
// Closed polygon of segments through the given vertices.
ArcCurve polygon_curve(std::span<const Point> vertices);
ArcCurve circle_curve(Point center, double radius, int turning = 1);

enum class EdgeRole { free_arc, inner_junction, border_junction };

const char* role_name(EdgeRole role);
std::optional<EdgeRole> role_from_name(std::string_view name);

struct OffsetResult {
  ArcCurve curve;
  // Source edges that degenerated to a point (free arcs and curvature-h
  // pieces of border junction arcs).
  std::vector<std::size_t> collapsed_indices;
  std::vector<Point> collapse_points;
  // For each source edge, the index of its image in `curve`, or -1.
  std::vector<long> source_to_output;
};

// Inner parallel curve at distance r of a labeled boundary with Cheeger
// constant h = 1/r: free arcs shrink to their centers, junction arcs map to
// concentric arcs of radius ρ ∓ r, segments move by r along the inner normal.
OffsetResult offset_inner(const ArcCurve& c, double r, double h,
                          std::span<const EdgeRole> roles);

}  // namespace cheegerlab
