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

#include <optional>
#include <span>
#include <vector>

#include "cheegerlab/arc_curve.hpp"
#include "cheegerlab/geometry.hpp"

namespace cheegerlab {

// Convex polygon with counterclockwise vertices. The constructor removes
// duplicate and collinear vertices, reverses clockwise input, and rejects
// non-convex or near-zero-area input.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  explicit ConvexPolygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }

  double area() const;
  double perimeter() const;
  Point centroid() const;
  // Radius of the largest inscribed disk.
  double inradius() const;
  bool contains(Point q, double slack = 0.0) const;
  ArcCurve boundary() const { return polygon_curve(vertices_); }

 private:
  std::vector<Point> vertices_;
};

double polygon_signed_area(std::span<const Point> pts);

// Keeps the part of `pts` with cross(b - a, q - a) >= 0 (left of a->b).
std::vector<Point> clip_left(const std::vector<Point>& pts, Point a, Point b);
// Keeps {q : dot(n, q) <= c}.
std::vector<Point> clip_halfplane(const std::vector<Point>& pts, Point n, double c);

// Monotone chain hull; counterclockwise, no collinear points.
std::vector<Point> convex_hull(std::vector<Point> pts);

// Erosion by a disk of radius t. Empty when the result has no interior.
std::optional<ConvexPolygon> inner_parallel_polygon(const ConvexPolygon& p, double t);

ConvexPolygon regular_polygon(int n, double area, Point center = {}, double rotation = 0.0);
ConvexPolygon unit_square();
// Equilateral triangle of the given area with a horizontal bottom side.
ConvexPolygon equilateral_triangle(double area = 1.0);

}  // namespace cheegerlab
