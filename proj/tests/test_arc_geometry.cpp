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
#include <random>

#include "cheegerlab/arc_curve.hpp"
#include "cheegerlab/convex_polygon.hpp"
#include "cheegerlab/errors.hpp"
#include "cheegerlab/fixtures.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cheegerlab;

namespace {

ArcCurve stadium_curve() { return stadium_domain(1.0, 1.0).boundary; }

ArcCurve figure_eight() {
  return ArcCurve({Edge::arc({1, 0}, 1.0, kPi, 3.0 * kPi, 1),
                   Edge::arc({-1, 0}, 1.0, 0.0, -kTwoPi, -1)},
                  true);
}

ArcCurve double_circle() {
  return ArcCurve({Edge::arc({0, 0}, 1.0, 0.0, kTwoPi, 1), Edge::arc({0, 0}, 1.0, 0.0, kTwoPi, 1)},
                  true);
}

}  // namespace

TEST_CASE("curve lengths") {
  CHECK(curve_length(circle_curve({0, 0}, 1.0)) == doctest::Approx(kTwoPi).epsilon(1e-15));
  const ConvexPolygon hex = regular_polygon(6, 1.0);
  CHECK(curve_length(hex.boundary()) == doctest::Approx(2.0 * std::pow(12.0, 0.25)).epsilon(1e-14));
  const ArcCurve quarter({Edge::arc({0, 0}, 2.0, 0.0, 0.5 * kPi, 1)}, false);
  CHECK(curve_length(quarter) == doctest::Approx(kPi).epsilon(1e-15));
}

TEST_CASE("edge validation") {
  CHECK_THROWS_AS(Edge::arc({0, 0}, 0.0, 0, 1, 1), ValidationError);
  CHECK_THROWS_AS(Edge::arc({0, 0}, 1.0, 0, 1, 2), ValidationError);
  CHECK_THROWS_AS(Edge::segment({1, 1}, {1, 1}), ValidationError);
  CHECK_THROWS_AS(ArcCurve({Edge::segment({0, 0}, {1, 0}), Edge::segment({1, 0.1}, {0, 0})}, true),
                  ValidationError);
  // a full circle keeps sweep 2π and a near-full arc keeps its own sweep
  CHECK(Edge::arc({0, 0}, 1, 0.3, 0.3 + kTwoPi, 1).as_arc().sweep() == doctest::Approx(kTwoPi));
  CHECK(Edge::arc({0, 0}, 1, 0.3, 0.2, 1).as_arc().sweep() == doctest::Approx(kTwoPi - 0.1));
  CHECK(Edge::arc({0, 0}, 1, 0.3, 0.2, -1).as_arc().sweep() == doctest::Approx(0.1));
}

TEST_CASE("signed area closed forms and oracle") {
  CHECK(signed_area(circle_curve({0, 0}, 1.0)) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(signed_area(circle_curve({0, 0}, 1.0, -1)) == doctest::Approx(-kPi).epsilon(1e-15));
  const ArcCurve st = stadium_curve();
  CHECK(signed_area(st) == doctest::Approx(kPi + 4.0).epsilon(1e-14));
  // quadrature of the row widths
  const double quad = oracle::simpson(
      [&](double y) {
        double s = 0.0;
        for (const auto& [x, w] : oracle::row_crossings(st, y)) s += w * x;
        return s;
      },
      -1.0 + 1e-12, 1.0 - 1e-12, 4000);
  CHECK(quad == doctest::Approx(kPi + 4.0).epsilon(1e-6));
  CHECK(oracle::raster_oriented_area(st) == doctest::Approx(kPi + 4.0).epsilon(5e-4));
  const ArcCurve open({Edge::segment({0, 0}, {1, 0})}, false);
  CHECK_THROWS_AS(signed_area(open), ContractViolation);
}

TEST_CASE("winding numbers") {
  const ArcCurve c = circle_curve({0, 0}, 1.0);
  CHECK(winding_number(c, {0.3, -0.2}) == 1);
  CHECK(winding_number(c, {1.5, 0.0}) == 0);
  CHECK(winding_number(circle_curve({0, 0}, 1.0, -1), {0.1, 0.1}) == -1);
  CHECK(winding_number(double_circle(), {0, 0}) == 2);
  CHECK_THROWS_AS(winding_number(c, {1.0, 0.0}), OnBoundaryError);
  const ArcCurve f8 = figure_eight();
  CHECK(winding_number(f8, {1.0, 0.2}) == 1);
  CHECK(winding_number(f8, {-1.0, 0.2}) == -1);
  CHECK(winding_number(f8, {0.0, 1.5}) == 0);
}

TEST_CASE("winding agrees with the ray-cast oracle on curved fixtures") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto fx = random_curved_domain(seed);
    for (const ArcCurve* c : {&fx.domain.boundary, &fx.kernel}) {
      for (int s = 0; s < 200; ++s) {
        const Point q{u(rng), u(rng)};
        if (distance_to_curve(*c, q) < 1e-6) continue;
        REQUIRE(winding_number(*c, q) == oracle::ray_winding(*c, q));
        ++checked;
      }
    }
  }
  CHECK(checked > 7000);
}

TEST_CASE("oriented area equals the rasterized winding area") {
  CHECK(oriented_area(figure_eight()) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(std::fabs(oracle::raster_oriented_area(figure_eight())) < 1e-3);
  CHECK(oriented_area(double_circle()) == doctest::Approx(kTwoPi).epsilon(1e-15));
  CHECK(oracle::raster_oriented_area(double_circle()) == doctest::Approx(kTwoPi).epsilon(5e-4));
  for (std::uint64_t seed = 100; seed < 104; ++seed) {
    const auto fx = random_curved_domain(seed);
    const double a = signed_area(fx.domain.boundary);
    CHECK(a > 0.0);
    CHECK(oracle::raster_oriented_area(fx.domain.boundary) == doctest::Approx(a).epsilon(5e-4));
    CHECK(oriented_area(fx.domain.boundary) == doctest::Approx(a).epsilon(1e-12));
  }
}

TEST_CASE("rigid motions, dilation and reversal") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const ArcCurve c = random_curved_domain(seed).domain.boundary;
    const double L = curve_length(c);
    const double A = signed_area(c);
    const ArcCurve moved = transformed(c, 1.0, 0.7 + seed, {3.0, -2.0});
    CHECK(curve_length(moved) == doctest::Approx(L).epsilon(1e-12));
    CHECK(signed_area(moved) == doctest::Approx(A).epsilon(1e-12));
    const double lam = 0.25 + 0.3 * seed;
    const ArcCurve scaled = transformed(c, lam, 0.0, {});
    CHECK(curve_length(scaled) == doctest::Approx(lam * L).epsilon(1e-12));
    CHECK(signed_area(scaled) == doctest::Approx(lam * lam * A).epsilon(1e-12));
    const ArcCurve rev = reversed(c);
    CHECK(curve_length(rev) == doctest::Approx(L).epsilon(1e-12));
    CHECK(signed_area(rev) == doctest::Approx(-A).epsilon(1e-12));
    CHECK(winding_number(rev, {0, 0}) == -winding_number(c, {0, 0}));
  }
}

TEST_CASE("bounding box covers arc extremes") {
  const auto box = bounding_box(ArcCurve({Edge::arc({0, 0}, 2.0, -0.5, 0.5, 1)}, false));
  CHECK(box.hi.x == doctest::Approx(2.0));
  CHECK(box.lo.x == doctest::Approx(2.0 * std::cos(0.5)));
}

TEST_CASE("inner offset pieces") {
  // kernel: square with a concave top of radius 2.5, dilated by r = 0.5
  const double r = 0.5;
  const double rho = 2.5;
  const double psi = std::asin(1.0 / rho);
  const Point c{0.0, 1.0 + rho * std::cos(psi)};
  const double a0 = std::atan2(1.0 - c.y, 1.0 - c.x);
  const ArcCurve kernel({Edge::segment({-1, -1}, {1, -1}), Edge::segment({1, -1}, {1, 1}),
                         Edge::arc_by_sweep(c, rho, a0, -2.0 * psi), Edge::segment({-1, 1}, {-1, -1})},
                        true);
  const auto fx = dilated_kernel(kernel, r);
  const ArcCurve& omega = fx.domain.boundary;
  // the concave side of Ω has radius 2
  REQUIRE(omega[4].is_arc());
  CHECK(omega[4].as_arc().radius == doctest::Approx(2.0));
  const OffsetResult off = offset_inner(omega, r, 1.0 / r, fx.domain.roles);
  CHECK(off.collapsed_indices.size() == 4);
  for (std::size_t i = 0; i < off.collapsed_indices.size(); ++i) {
    CHECK(fx.domain.roles[off.collapsed_indices[i]] == EdgeRole::free_arc);
    CHECK(distance(off.collapse_points[i], omega[off.collapsed_indices[i]].as_arc().center) == 0.0);
  }
  const Edge& image = off.curve[static_cast<std::size_t>(off.source_to_output[4])];
  CHECK(image.as_arc().radius == doctest::Approx(2.5));
  CHECK(distance(image.as_arc().center, c) < 1e-15);
  const Edge& seg = off.curve[static_cast<std::size_t>(off.source_to_output[0])];
  CHECK(seg.length() == doctest::Approx(omega[0].length()));
  CHECK(omega[0].distance_to(seg.start()) == doctest::Approx(r));
  CHECK(signed_area(off.curve) == doctest::Approx(signed_area(kernel)).epsilon(1e-13));

  std::vector<EdgeRole> bad = fx.domain.roles;
  bad.pop_back();
  CHECK_THROWS_AS(offset_inner(omega, r, 1.0 / r, bad), ContractViolation);
  // a convex side whose radius does not exceed r degenerates
  const ArcCurve lens({Edge::arc({0, 0}, 0.4, 0.0, kPi, 1), Edge::segment({-0.4, 0}, {0.4, 0})}, true);
  CHECK_THROWS_AS(offset_inner(lens, r, 2.0, std::vector<EdgeRole>{EdgeRole::inner_junction,
                                                                   EdgeRole::inner_junction}),
                  DegenerateOffsetError);
  CHECK_THROWS_AS(offset_inner(lens, r, 2.0, std::vector<EdgeRole>{EdgeRole::free_arc,
                                                                   EdgeRole::inner_junction}),
                  ContractViolation);
}
