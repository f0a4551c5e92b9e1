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
#include <vector>

#include "cheegerlab/cluster.hpp"
#include "cheegerlab/errors.hpp"
#include "cheegerlab/fixtures.hpp"
#include "cheegerlab/hales.hpp"
#include "doctest.h"

using namespace cheegerlab;

namespace {

const double kHexPerimeter = 2.0 * std::pow(12.0, 0.25);

ArcCurve hexagon_curve() {
  const ConvexPolygon hex = regular_polygon(6, 1.0);
  return polygon_curve(hex.vertices());
}

NodeSet transformed_nodes(const NodeSet& n, double s, double rot, Point shift) {
  NodeSet out = n;
  for (Point& p : out.nodes) {
    p = Point{std::cos(rot) * p.x - std::sin(rot) * p.y, std::sin(rot) * p.x + std::cos(rot) * p.y} * s +
        shift;
  }
  return out;
}

}  // namespace

TEST_CASE("hexagon is the equality case") {
  const ArcCurve hex = hexagon_curve();
  const NodeSet nodes = vertex_nodes(hex);
  CHECK(nodes.size() == 6);
  const double r_star = 1.0 / std::sqrt(kPi);
  for (ClampMode mode : {ClampMode::scaled, ClampMode::literal}) {
    const DeficitReport rep = hales_check(hex, nodes, r_star, mode);
    CHECK(std::fabs(rep.lhs - kHexPerimeter) < 1e-10);
    CHECK(std::fabs(rep.rhs - kHexPerimeter) < 1e-10);
    CHECK(rep.satisfied);
    CHECK(rep.truncated_T == doctest::Approx(0.0));
  }
}

TEST_CASE("unit square with corner nodes") {
  const ArcCurve sq = polygon_curve(unit_square().vertices());
  const DeficitReport rep = hales_check(sq, vertex_nodes(sq), 1.0 / std::sqrt(kPi));
  CHECK(rep.lhs == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(rep.rhs == doctest::Approx(kHexPerimeter + 2.0 * kHalesNodePenalty).epsilon(1e-14));
  CHECK(rep.rhs == doctest::Approx(3.8234).epsilon(1e-4));
  CHECK(rep.satisfied);
  CHECK(rep.N == 4);
}

TEST_CASE("area precondition") {
  const ArcCurve sq = polygon_curve(unit_square().vertices());
  CHECK_THROWS_AS(hales_check(sq, vertex_nodes(sq), 1.0), PreconditionError);
  CHECK_THROWS_AS(hales_check(sq, vertex_nodes(sq), -1.0), DomainError);
  CHECK_THROWS_AS(chord_deficits(sq, NodeSet{}), ContractViolation);
}

TEST_CASE("nodes of the square Cheeger set") {
  const ArcDomain d = cheeger_set_domain(cheeger_convex(unit_square()));
  const OffsetResult inner = inner_cheeger_boundary(d);
  const NodeSet nodes = place_nodes(inner.curve, d);
  CHECK(nodes.size() == 4);
  for (bool e : nodes.exceptional) CHECK_FALSE(e);
  for (Point p : nodes.nodes) CHECK(distance_to_curve(inner.curve, p) < 1e-12);
  // A different domain's boundary is rejected.
  const ArcDomain other = cheeger_set_domain(cheeger_convex(regular_polygon(6, 1.0)));
  CHECK_THROWS_AS(place_nodes(inner.curve, other), ContractViolation);
}

TEST_CASE("border arc spanning two sides adds an exceptional node") {
  const Cluster cl = four_subtriangle_cluster();
  std::size_t corner_cells = 0;
  for (const ArcDomain& cell : cl.cells) {
    const OffsetResult inner = inner_cheeger_boundary(cell);
    const NodeSet nodes = place_nodes(inner, cell);
    std::size_t exc = 0;
    for (bool e : nodes.exceptional) exc += e ? 1 : 0;
    if (exc > 0) {
      ++corner_cells;
      CHECK(exc == 1);
      CHECK(nodes.size() == 3);
    }
  }
  CHECK(corner_cells == 3);
}

TEST_CASE("chord deficits of elementary portions") {
  const Edge seg = Edge::segment({0, 0}, {2, 1});
  CHECK(chord_deficit(std::span<const Edge>(&seg, 1)) == 0.0);

  for (double theta : {0.3, 1.0, 2.5}) {
    const double R = 1.7;
    const Edge concave = Edge::arc_by_sweep({0.3, -0.2}, R, 0.4, -theta);
    const double x = chord_deficit(std::span<const Edge>(&concave, 1));
    CHECK(x == doctest::Approx(-0.5 * R * R * (theta - std::sin(theta))).epsilon(1e-12));
  }
}

TEST_CASE("paired junction arcs have a nonpositive deficit sum") {
  const double rho = 2.0;
  const double theta = 0.8;
  for (double rj : {0.1, 0.3, 0.6}) {
    for (double rl : {0.1, 0.4, 0.9}) {
      // Cell j sees the junction as concave, cell l as convex.
      const Edge ej = Edge::arc_by_sweep({0, 0}, rho + rj, 1.0 + theta, -theta);
      const Edge el = Edge::arc_by_sweep({0, 0}, rho - rl, 1.0, theta);
      const double xj = chord_deficit(std::span<const Edge>(&ej, 1));
      const double xl = chord_deficit(std::span<const Edge>(&el, 1));
      CHECK(xj + xl < 0.0);
      CHECK(std::fabs(xj) > std::fabs(xl));
      CHECK(-xj / xl == doctest::Approx(std::pow((rho + rj) / (rho - rl), 2)).epsilon(1e-12));
    }
  }
}

TEST_CASE("truncated deficit is invariant under rigid motions") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const CurvedFixture fx = random_curved_domain(seed);
    const OffsetResult inner = inner_cheeger_boundary(fx.domain);
    const NodeSet nodes = place_nodes(inner, fx.domain);
    const DeficitReport a = chord_deficits(inner.curve, nodes);
    const double rot = 0.37 * static_cast<double>(seed);
    const Point shift{1.5, -2.0};
    const DeficitReport b =
        chord_deficits(transformed(inner.curve, 1.0, rot, shift), transformed_nodes(nodes, 1.0, rot, shift));
    REQUIRE(a.per_arc_x.size() == b.per_arc_x.size());
    CHECK(std::fabs(a.truncated_T - b.truncated_T) < 1e-12);
  }
}

TEST_CASE("randomized class-A inner boundaries satisfy the inequality") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const CurvedFixture fx = random_curved_domain(seed);
    const OffsetResult inner = inner_cheeger_boundary(fx.domain);
    const NodeSet nodes = place_nodes(inner, fx.domain);
    const DeficitReport rep = hales_check(inner.curve, nodes, fx.domain.r());
    CHECK(rep.satisfied);
    CHECK_FALSE(rep.clamp_active);
    const DeficitReport lit = hales_check(inner.curve, nodes, fx.domain.r(), ClampMode::literal);
    CHECK(lit.truncated_T == doctest::Approx(rep.truncated_T));
    ++checked;
  }
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const ConvexPolygon p = random_convex_polygon(3 + static_cast<int>(seed % 10), seed);
    const ArcDomain d = cheeger_set_domain(cheeger_convex(p, 1e-13, EdgeRole::inner_junction));
    const OffsetResult inner = inner_cheeger_boundary(d);
    const DeficitReport rep = hales_check(inner.curve, place_nodes(inner, d), d.r());
    CHECK(rep.satisfied);
    ++checked;
  }
  CHECK(checked == 1000);
}
