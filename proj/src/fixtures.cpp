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


#include "cheegerlab/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cheegerlab/errors.hpp"

namespace cheegerlab {

namespace {

Point rotate(Point p, double a) {
  return {std::cos(a) * p.x - std::sin(a) * p.y, std::sin(a) * p.x + std::cos(a) * p.y};
}

Point outward(Point tangent) { return {tangent.y, -tangent.x}; }

struct Side {
  Point a;
  Point b;
  double psi = 0.0;  // signed half-turn along the side; 0 for a segment

  Point start_tangent() const { return rotate(unit(b - a), -psi); }
  Point end_tangent() const { return rotate(unit(b - a), psi); }
  Point center() const {
    const double c = distance(a, b);
    return (a + b) * 0.5 + perp(unit(b - a)) * (0.5 * c / std::tan(psi));
  }
  double radius() const { return distance(a, b) / (2.0 * std::sin(std::fabs(psi))); }
};

// True when points pushed slightly off each edge fall inside/outside as the
// orientation predicts, which fails for self-overlapping curves.
bool looks_simple(const ArcCurve& c) {
  const double eps = 1e-4 * curve_length(c);
  for (const Edge& e : c.edges()) {
    for (int s = 1; s < 8; ++s) {
      const double t = s / 8.0;
      const Point p = e.point_at(t);
      const Point q = e.point_at(std::min(1.0, t + 1e-6));
      const Point left = perp(unit(q - p));
      try {
        if (winding_number(c, p + left * eps) != 1) return false;
        if (winding_number(c, p - left * eps) != 0) return false;
      } catch (const OnBoundaryError&) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

ConvexPolygon random_convex_polygon(int n, std::uint64_t seed) {
  if (n < 3) throw DomainError("random polygon needs at least 3 vertices");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double min_gap = 0.2 * kTwoPi / n;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<double> ang(n);
    for (double& a : ang) a = kTwoPi * u01(rng);
    std::sort(ang.begin(), ang.end());
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      const double gap = i + 1 < n ? ang[i + 1] - ang[i] : ang[0] + kTwoPi - ang[i];
      if (gap < min_gap) ok = false;
    }
    if (!ok) continue;
    const double ax = 0.5 + 1.5 * u01(rng);
    const double ay = 0.5 + 1.5 * u01(rng);
    const double rot = kTwoPi * u01(rng);
    const Point shift{4.0 * u01(rng) - 2.0, 4.0 * u01(rng) - 2.0};
    std::vector<Point> v;
    v.reserve(n);
    for (double a : ang) v.push_back(rotate({ax * std::cos(a), ay * std::sin(a)}, rot) + shift);
    try {
      ConvexPolygon p(std::move(v));
      if (static_cast<int>(p.size()) == n) return p;
    } catch (const ValidationError&) {
    }
  }
  throw GenerationError("random_convex_polygon: rejection budget exhausted");
}

CurvedFixture random_curved_domain(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int attempt = 0; attempt < 2000; ++attempt) {
    const int n = 3 + static_cast<int>(u01(rng) * 6.0);
    std::vector<double> ang(n);
    const double base = kTwoPi * u01(rng);
    for (int i = 0; i < n; ++i) ang[i] = base + kTwoPi * (i + 0.7 * (u01(rng) - 0.5)) / n;
    std::vector<Side> sides(n);
    std::vector<Point> v(n);
    for (int i = 0; i < n; ++i) v[i] = polar(0.8 + 0.4 * u01(rng), ang[i]);
    for (int i = 0; i < n; ++i) {
      sides[i].a = v[i];
      sides[i].b = v[(i + 1) % n];
      const double pick = u01(rng);
      if (pick < 0.3) {
        sides[i].psi = 0.0;
      } else if (pick < 0.65) {
        sides[i].psi = 0.05 + 0.35 * u01(rng);
      } else {
        sides[i].psi = -(0.03 + 0.25 * u01(rng));
      }
    }
    bool ok = true;
    std::vector<double> turn(n);
    for (int i = 0; i < n && ok; ++i) {
      const Point t0 = sides[i].end_tangent();
      const Point t1 = sides[(i + 1) % n].start_tangent();
      turn[i] = std::atan2(cross(t0, t1), dot(t0, t1));
      if (turn[i] <= 0.05 || turn[i] >= kPi - 0.05) ok = false;
    }
    if (!ok) continue;
    std::vector<Edge> kedges;
    for (const Side& s : sides) {
      if (s.psi == 0.0) {
        kedges.push_back(Edge::segment(s.a, s.b));
      } else {
        const Point c = s.center();
        kedges.push_back(Edge::arc_by_sweep(c, s.radius(), angle_of(s.a - c), 2.0 * s.psi));
      }
    }
    ArcCurve kernel(std::move(kedges), true);
    const double area = signed_area(kernel);
    if (!(area > 0.0) || !looks_simple(kernel)) continue;
    const double r = std::sqrt(area / kPi);
    for (const Side& s : sides) {
      if (s.psi < 0.0 && s.radius() <= 1.2 * r) ok = false;
    }
    if (!ok) continue;

    CurvedFixture fx = dilated_kernel(kernel, r);
    if (!looks_simple(fx.domain.boundary)) continue;
    return fx;
  }
  throw GenerationError("random_curved_domain: rejection budget exhausted");
}

CurvedFixture dilated_kernel(const ArcCurve& kernel, double r) {
  if (!(r > 0.0)) throw DomainError("dilation radius must be positive");
  if (!kernel.closed()) throw ContractViolation("kernel must be closed");
  const std::size_t n = kernel.size();
  std::vector<Edge> edges;
  std::vector<EdgeRole> roles;
  for (std::size_t i = 0; i < n; ++i) {
    const Edge& ke = kernel[i];
    if (ke.is_segment()) {
      const Segment& s = ke.as_segment();
      const Point shift = outward(unit(s.end - s.start)) * r;
      edges.push_back(Edge::segment(s.start + shift, s.end + shift));
    } else {
      const Arc& a = ke.as_arc();
      const double rho = a.turning > 0 ? a.radius + r : a.radius - r;
      if (!(rho > 0.0)) throw DomainError("concave kernel side has radius <= r");
      edges.push_back(Edge::arc_by_sweep(a.center, rho, a.start_angle, a.signed_sweep()));
    }
    roles.push_back(EdgeRole::inner_junction);
    const Point t0 = ke.end_tangent();
    const Point t1 = kernel[(i + 1) % n].start_tangent();
    const double turn = std::atan2(cross(t0, t1), dot(t0, t1));
    if (!(turn > 0.0)) throw DomainError("kernel corner is not convex");
    edges.push_back(Edge::arc_by_sweep(ke.end(), r, angle_of(outward(t0)), turn));
    roles.push_back(EdgeRole::free_arc);
  }
  CurvedFixture fx;
  fx.domain = ArcDomain{ArcCurve(std::move(edges), true), std::move(roles), 1.0 / r};
  fx.kernel = kernel;
  fx.corners = static_cast<int>(n);
  return fx;
}

ArcDomain stadium_domain(double R, double half_gap) {
  if (!(R > 0.0) || !(half_gap > 0.0)) throw DomainError("stadium needs positive sizes");
  const Point c0{-half_gap, 0.0};
  const Point c1{half_gap, 0.0};
  std::vector<Edge> e;
  e.push_back(Edge::segment(c0 + Point{0, -R}, c1 + Point{0, -R}));
  e.push_back(Edge::arc(c1, R, -0.5 * kPi, 0.5 * kPi, 1));
  e.push_back(Edge::segment(c1 + Point{0, R}, c0 + Point{0, R}));
  e.push_back(Edge::arc(c0, R, 0.5 * kPi, 1.5 * kPi, 1));
  return ArcDomain{ArcCurve(std::move(e), true),
                   {EdgeRole::inner_junction, EdgeRole::free_arc, EdgeRole::inner_junction,
                    EdgeRole::free_arc},
                   1.0 / R};
}

ArcDomain ball_domain(double R) {
  return ArcDomain{circle_curve({0, 0}, R), {EdgeRole::free_arc}, 1.0 / R};
}

}  // namespace cheegerlab
