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


#include <cmath>

#include "cheegerlab/cheeger.hpp"
#include "cheegerlab/errors.hpp"
#include "cheegerlab/fixtures.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cheegerlab;

namespace {

// Tangential polygons: h = sqrt(π/A) + 1/ρ, from (A/ρ²)(ρ - r)² = πr².
double tangential_h(double area, double inradius) {
  return std::sqrt(kPi / area) + 1.0 / inradius;
}

}  // namespace

TEST_CASE("convex polygon cleanup and rejection") {
  const ConvexPolygon p({{0, 0}, {0, 1}, {1, 1}, {1, 0.5}, {1, 0}, {1, 0}});
  CHECK(p.size() == 4);
  CHECK(p.area() == doctest::Approx(1.0));
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {2, 0}, {1, 0.2}, {2, 2}, {0, 2}}), ValidationError);
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}, {2, 0}}), ValidationError);
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}}), ValidationError);
  CHECK(equilateral_triangle(1.0).inradius() == doctest::Approx(std::pow(3.0, -0.75)).epsilon(1e-7));
}

TEST_CASE("inner parallel polygon") {
  const auto sq = inner_parallel_polygon(unit_square(), 0.25);
  REQUIRE(sq);
  CHECK(sq->area() == doctest::Approx(0.25).epsilon(1e-14));
  const ConvexPolygon tri = equilateral_triangle(1.0);
  CHECK(inner_parallel_polygon(tri, 0.0)->area() == doctest::Approx(1.0));
  CHECK_FALSE(inner_parallel_polygon(tri, std::pow(3.0, -0.75)));
  CHECK_FALSE(inner_parallel_polygon(tri, 1.0));
  CHECK_THROWS_AS(inner_parallel_polygon(tri, -0.1), DomainError);
}

TEST_CASE("cheeger constants against closed forms") {
  const auto sq = cheeger_convex(unit_square());
  CHECK(std::fabs(sq.h - (2.0 + std::sqrt(kPi))) < 1e-11);
  CHECK(sq.h * sq.r == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sq.residual < 1e-12);
  const auto hex = cheeger_convex(regular_polygon(6, 1.0));
  CHECK(std::fabs(hex.h - hexagon_constant()) < 1e-9);
  const auto tri = cheeger_convex(equilateral_triangle(1.0));
  CHECK(std::fabs(tri.h - (std::sqrt(kPi) + std::pow(3.0, 0.75))) < 1e-10);
  for (int n = 3; n <= 12; ++n) {
    const ConvexPolygon p = regular_polygon(n, 2.0, {1, 2}, 0.3 * n);
    const double apothem = std::sqrt(2.0 * 2.0 / (n * std::sin(kTwoPi / n))) * std::cos(kPi / n);
    CHECK(std::fabs(cheeger_convex(p).h - tangential_h(2.0, apothem)) < 1e-9);
    CHECK(p.inradius() == doctest::Approx(apothem).epsilon(1e-7));
  }
  const double R = 1.5;
  const auto disk = cheeger_convex(regular_polygon(256, 0.5 * 256 * R * R * std::sin(kTwoPi / 256)));
  CHECK(std::fabs(disk.h - 2.0 / R) < 1e-3);
}

TEST_CASE("hexagon constant identity") {
  const double h = hexagon_constant();
  CHECK(h == doctest::Approx(3.6336636).epsilon(1e-7));
  CHECK(std::fabs(h * h - (kPi + 2 * std::sqrt(3.0) + 2 * std::sqrt(kPi) * std::pow(12.0, 0.25))) < 1e-12);
}

TEST_CASE("cheeger scaling and monotonicity") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ConvexPolygon p = random_convex_polygon(3 + seed % 10, seed);
    const double h = cheeger_convex(p).h;
    for (double lam : {0.1, 2.0, 37.0}) {
      std::vector<Point> v;
      for (const Point& q : p.vertices()) v.push_back(q * lam);
      CHECK(cheeger_convex(ConvexPolygon(v)).h == doctest::Approx(h / lam).epsilon(1e-11));
    }
  }
  double prev = 1e300;
  for (double w = 1.0; w <= 4.0; w += 0.5) {
    const double h = cheeger_convex(ConvexPolygon({{0, 0}, {w, 0}, {w, 1}, {0, 1}})).h;
    CHECK(h < prev);
    prev = h;
  }
}

TEST_CASE("defining function decreases along the bracket") {
  const ConvexPolygon p = random_convex_polygon(7, 3);
  const double hi = 2 * p.area() / p.perimeter();
  double prev = 1e300;
  for (int i = 1; i < 200; ++i) {
    const double t = hi * i / 200.0;
    const auto k = inner_parallel_polygon(p, t);
    const double g = (k ? k->area() : 0.0) - kPi * t * t;
    CHECK(g < prev);
    prev = g;
  }
}

TEST_CASE("cheeger set boundary matches the dilation of the inner set") {
  const auto sq = cheeger_convex(unit_square());
  const ArcCurve& b = sq.cheeger_set_boundary;
  CHECK(b.size() == 8);
  const double r = sq.r;
  // |K_r ⊕ B_r| = |K_r| + r per(K_r) + πr² = 2πr² + 4r(1 - 2r)
  CHECK(signed_area(b) == doctest::Approx(2 * kPi * r * r + 4 * r * (1 - 2 * r)).epsilon(1e-12));
  CHECK(curve_length(b) / signed_area(b) == doctest::Approx(sq.h).epsilon(1e-11));
  CHECK(oracle::raster_oriented_area(b) == doctest::Approx(signed_area(b)).epsilon(5e-4));
}

TEST_CASE("inner cheeger boundary of the square") {
  const auto sq = cheeger_convex(unit_square());
  const ArcDomain d = cheeger_set_domain(sq);
  const auto inner = inner_cheeger_boundary(d);
  CHECK(inner.collapsed_indices.size() == 4);
  CHECK(curve_length(inner.curve) == doctest::Approx(4 * std::sqrt(kPi) * sq.r).epsilon(1e-11));
  CHECK(oriented_area(inner.curve) ==
        doctest::Approx(kPi / std::pow(2 + std::sqrt(kPi), 2)).epsilon(1e-11));
  CHECK(oriented_area(inner.curve) == doctest::Approx(0.2207505).epsilon(1e-6));
}

TEST_CASE("inner cheeger boundary of the hexagon") {
  const auto hex = cheeger_convex(regular_polygon(6, 1.0));
  const auto inner = inner_cheeger_boundary(cheeger_set_domain(hex));
  CHECK(inner.curve.size() == 6);
  CHECK(curve_length(inner.curve) ==
        doctest::Approx(curve_length(hex.cheeger_set_boundary) - kTwoPi * hex.r).epsilon(1e-11));
  // similar to the hexagon: side lengths equal
  for (const auto& e : inner.curve.edges()) {
    CHECK(e.length() == doctest::Approx(inner.curve[0].length()).epsilon(1e-10));
  }
}

TEST_CASE("structure report on admissible domains") {
  const auto sq = structure_report(cheeger_set_domain(cheeger_convex(unit_square())));
  CHECK(sq.is_class_A);
  CHECK(sq.residuals_computed);
  CHECK(std::fabs(sq.angle_rule_residual) < 1e-10);
  CHECK(std::fabs(sq.perimeter_residual) < 1e-10);
  CHECK(std::fabs(sq.area_residual) < 1e-10);
  CHECK(std::fabs(sq.representation_residuals[0]) < 1e-10);
  CHECK(std::fabs(sq.representation_residuals[1]) < 1e-10);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto fx = random_curved_domain(seed);
    const auto rep = structure_report(fx.domain);
    INFO("seed " << seed);
    CHECK(rep.is_class_A);
    CHECK(std::fabs(rep.angle_rule_residual) < 1e-12);
    CHECK(std::fabs(rep.perimeter_residual) < 1e-12);
    CHECK(std::fabs(rep.area_residual) < 1e-12);
    CHECK(std::fabs(rep.representation_residuals[0]) < 1e-12);
    CHECK(std::fabs(rep.representation_residuals[1]) < 1e-12);
    const auto inner = inner_cheeger_boundary(fx.domain);
    CHECK(oriented_area(inner.curve) == doctest::Approx(signed_area(fx.kernel)).epsilon(1e-12));
  }
}

TEST_CASE("structure report rejects exclusions") {
  const auto ball = structure_report(ball_domain(1.0));
  CHECK_FALSE(ball.is_class_A);
  CHECK_THROWS_AS(inner_cheeger_boundary(ball_domain(1.0)), ValidationError);
  const auto st = structure_report(stadium_domain(1.0, 1.0));
  CHECK_FALSE(st.is_class_A);
  CHECK(std::find(st.violations.begin(), st.violations.end(), "self_cheeger_ratio") !=
        st.violations.end());
  // square with rounded corners of radius larger than the Cheeger radius
  const double rr = 0.35;
  const ConvexPolygon core({{rr, rr}, {1 - rr, rr}, {1 - rr, 1 - rr}, {rr, 1 - rr}});
  const auto fx = dilated_kernel(core.boundary(), rr);
  CHECK_FALSE(structure_report(fx.domain).is_class_A);
  // hexagon itself: no free arcs and corners
  const ArcDomain hex{regular_polygon(6, 1.0).boundary(),
                      std::vector<EdgeRole>(6, EdgeRole::inner_junction), hexagon_constant()};
  const auto hr = structure_report(hex);
  CHECK_FALSE(hr.is_class_A);
  // missing labels
  ArcDomain unl = cheeger_set_domain(cheeger_convex(unit_square()));
  unl.roles.pop_back();
  CHECK_FALSE(structure_report(unl).is_class_A);
  CHECK_FALSE(structure_report(unl).residuals_computed);
}

TEST_CASE("strip areas match the line integrals") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto fx = random_curved_domain(seed);
    const auto inner = inner_cheeger_boundary(fx.domain);
    double total = 0.0;
    for (const auto& s : strip_areas(fx.domain, inner)) {
      CHECK(s.line_integral == doctest::Approx(s.closed_form).epsilon(1e-11));
      total += s.closed_form;
    }
    CHECK(total == doctest::Approx(signed_area(fx.domain.boundary) - oriented_area(inner.curve))
                       .epsilon(1e-12));
  }
}
