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


#include "cheegerlab/convex_polygon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cheegerlab/errors.hpp"

namespace cheegerlab {

namespace {

double ring_scale(const std::vector<Point>& pts) {
  BoundingBox box;
  for (const Point& p : pts) box.expand(p);
  return box.diagonal();
}

// Drops repeated and collinear vertices of a closed ring.
std::vector<Point> cleanup_ring(std::vector<Point> pts, double eps) {
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const Point& p : pts) {
      if (out.empty() || distance(out.back(), p) > eps) out.push_back(p);
    }
    while (out.size() > 1 && distance(out.front(), out.back()) <= eps) out.pop_back();
    if (out.size() != pts.size()) changed = true;
    pts = std::move(out);
    if (pts.size() < 3) break;
    const std::size_t n = pts.size();
    std::vector<Point> kept;
    kept.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = pts[(i + n - 1) % n];
      const Point& b = pts[i];
      const Point& c = pts[(i + 1) % n];
      const double area2 = cross(b - a, c - b);
      const double len = std::max(distance(a, b), distance(b, c));
      if (std::fabs(area2) <= eps * len) {
        changed = true;
        continue;
      }
      kept.push_back(b);
    }
    pts = std::move(kept);
  }
  return pts;
}

std::vector<Point> eroded_ring(const std::vector<Point>& v, double t) {
  std::vector<Point> pts = v;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n && !pts.empty(); ++i) {
    const Point a = v[i];
    const Point b = v[(i + 1) % n];
    const Point nrm = perp(unit(b - a));
    // Keep dot(nrm, q - a) >= t, i.e. dot(-nrm, q) <= -dot(nrm, a) - t.
    pts = clip_halfplane(pts, -nrm, -dot(nrm, a) - t);
  }
  return pts;
}

}  // namespace

double polygon_signed_area(std::span<const Point> pts) {
  double s = 0.0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) s += cross(pts[i], pts[(i + 1) % n]);
  return 0.5 * s;
}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) {
  for (const Point& p : vertices) {
    if (!is_finite(p)) throw ValidationError("polygon vertex is not finite");
  }
  const double scale = ring_scale(vertices);
  if (!(scale > 0.0)) throw ValidationError("polygon has zero extent");
  vertices = cleanup_ring(std::move(vertices), 1e-12 * scale);
  if (vertices.size() < 3) {
    throw ValidationError("polygon has fewer than 3 distinct non-collinear vertices");
  }
  double a = polygon_signed_area(vertices);
  if (std::fabs(a) <= 1e-12 * scale * scale) {
    throw ValidationError("polygon area is numerically zero");
  }
  if (a < 0.0) std::reverse(vertices.begin(), vertices.end());
  const std::size_t n = vertices.size();
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point d0 = vertices[(i + 1) % n] - vertices[i];
    const Point d1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
    if (cross(d0, d1) <= 0.0) {
      throw ValidationError("polygon is not convex at vertex " + std::to_string((i + 1) % n));
    }
    turning += std::atan2(cross(d0, d1), dot(d0, d1));
  }
  if (std::fabs(turning - kTwoPi) > 1e-6) {
    throw ValidationError("polygon winds more than once");
  }
  vertices_ = std::move(vertices);
}

double ConvexPolygon::area() const { return polygon_signed_area(vertices_); }

double ConvexPolygon::perimeter() const {
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    s += distance(vertices_[i], vertices_[(i + 1) % size()]);
  }
  return s;
}

Point ConvexPolygon::centroid() const {
  double cx = 0.0;
  double cy = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    const Point& p = vertices_[i];
    const Point& q = vertices_[(i + 1) % size()];
    const double w = cross(p, q);
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  const double a6 = 6.0 * area();
  return {cx / a6, cy / a6};
}

double ConvexPolygon::inradius() const {
  double lo = 0.0;
  double hi = 2.0 * area() / perimeter();
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const auto ring = eroded_ring(vertices_, mid);
    if (ring.size() >= 3 && polygon_signed_area(ring) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool ConvexPolygon::contains(Point q, double slack) const {
  for (std::size_t i = 0; i < size(); ++i) {
    const Point a = vertices_[i];
    const Point b = vertices_[(i + 1) % size()];
    if (cross(unit(b - a), q - a) < -slack) return false;
  }
  return true;
}

std::vector<Point> clip_halfplane(const std::vector<Point>& pts, Point n, double c) {
  std::vector<Point> out;
  const std::size_t m = pts.size();
  if (m == 0) return out;
  out.reserve(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    const Point& p = pts[i];
    const Point& q = pts[(i + 1) % m];
    const double fp = dot(n, p) - c;
    const double fq = dot(n, q) - c;
    if (fp <= 0.0) out.push_back(p);
    if ((fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0)) {
      const double s = fp / (fp - fq);
      out.push_back(p + (q - p) * s);
    }
  }
  return out;
}

std::vector<Point> clip_left(const std::vector<Point>& pts, Point a, Point b) {
  const Point n = -perp(b - a);
  return clip_halfplane(pts, n, dot(n, a));
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], *it - hull[k - 2]) <= 0.0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

std::optional<ConvexPolygon> inner_parallel_polygon(const ConvexPolygon& p, double t) {
  if (!(t >= 0.0)) throw DomainError("erosion distance must be nonnegative");
  if (t == 0.0) return p;
  const double scale = ring_scale(p.vertices());
  auto ring = cleanup_ring(eroded_ring(p.vertices(), t), 1e-12 * scale);
  if (ring.size() < 3 || polygon_signed_area(ring) <= 1e-12 * scale * scale) {
    return std::nullopt;
  }
  try {
    return ConvexPolygon(std::move(ring));
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

ConvexPolygon regular_polygon(int n, double area, Point center, double rotation) {
  if (n < 3) throw DomainError("regular polygon needs at least 3 sides");
  if (!(area > 0.0)) throw DomainError("regular polygon area must be positive");
  // area = (n/2) R² sin(2π/n)
  const double R = std::sqrt(2.0 * area / (n * std::sin(kTwoPi / n)));
  std::vector<Point> v;
  v.reserve(n);
  for (int i = 0; i < n; ++i) v.push_back(center + polar(R, rotation + kTwoPi * i / n));
  return ConvexPolygon(std::move(v));
}

ConvexPolygon unit_square() { return ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

ConvexPolygon equilateral_triangle(double area) {
  const double s = std::sqrt(4.0 * area / std::sqrt(3.0));
  return ConvexPolygon({{0, 0}, {s, 0}, {0.5 * s, 0.5 * std::sqrt(3.0) * s}});
}

}  // namespace cheegerlab
