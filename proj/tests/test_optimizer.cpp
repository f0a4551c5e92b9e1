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

#include "cheegerlab/cheeger.hpp"
#include "cheegerlab/convex_polygon.hpp"
#include "cheegerlab/errors.hpp"
#include "cheegerlab/optimizer.hpp"
#include "doctest.h"

using namespace cheegerlab;

namespace {

SeedConfiguration random_configuration(const ConvexPolygon& c, std::size_t k, std::uint64_t seed,
                                       double weight_scale) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0), w(-weight_scale, weight_scale);
  SeedConfiguration cfg;
  const auto& v = c.vertices();
  while (cfg.k() < k) {
    // Random convex combination of the vertices.
    double a = u(rng), b = u(rng);
    if (a + b > 1.0) {
      a = 1.0 - a;
      b = 1.0 - b;
    }
    cfg.seeds.push_back(v[0] + (v[1] - v[0]) * a + (v[2] - v[0]) * b);
    cfg.weights.push_back(w(rng));
  }
  return cfg;
}

}  // namespace

TEST_CASE("power diagram basics") {
  const ConvexPolygon tri = equilateral_triangle(1.0);
  SeedConfiguration one{{tri.centroid()}, {0.0}};
  const auto cells1 = power_diagram_cells(one, tri);
  REQUIRE(cells1.size() == 1);
  CHECK(cells1[0].area() == doctest::Approx(1.0).epsilon(1e-14));

  const SeedConfiguration vor = random_configuration(tri, 12, 5, 0.0);
  const auto cells = power_diagram_cells(vor, tri);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (Point p : cells[i].vertices()) {
      for (std::size_t j = 0; j < vor.k(); ++j)
        CHECK(distance(p, vor.seeds[i]) <= distance(p, vor.seeds[j]) + 1e-12);
    }
  }
}

TEST_CASE("power cells tile the container") {
  const ConvexPolygon tri = equilateral_triangle(2.0);
  int feasible = 0;
  for (std::uint64_t s = 0; s < 40; ++s) {
    const SeedConfiguration cfg = random_configuration(tri, 3 + s % 10, s, 0.01);
    try {
      const auto cells = power_diagram_cells(cfg, tri);
      double sum = 0.0;
      for (const ConvexPolygon& c : cells) sum += c.area();
      CHECK(std::fabs(sum - 2.0) <= 1e-9 * 2.0);
      ++feasible;
    } catch (const DegenerateConfigurationError&) {
    }
  }
  CHECK(feasible > 30);
  SeedConfiguration crushed{{{0.3, 0.2}, {0.5, 0.3}}, {0.0, 100.0}};
  CHECK_THROWS_AS(power_diagram_cells(crushed, tri), DegenerateConfigurationError);
  CHECK_FALSE(evaluate_configuration(crushed, tri).feasible);
}

TEST_CASE("objective invariance") {
  const ConvexPolygon tri = equilateral_triangle(1.0);
  const SeedConfiguration cfg = random_configuration(tri, 6, 11, 0.0);
  const Evaluation base = evaluate_configuration(cfg, tri);
  REQUIRE(base.feasible);

  SeedConfiguration perm = cfg;
  std::reverse(perm.seeds.begin(), perm.seeds.end());
  std::reverse(perm.weights.begin(), perm.weights.end());
  CHECK(evaluate_configuration(perm, tri).objective == doctest::Approx(base.objective).epsilon(1e-12));

  const double rot = 0.7;
  const Point shift{3.0, -1.0};
  auto move = [&](Point p) {
    return Point{std::cos(rot) * p.x - std::sin(rot) * p.y, std::sin(rot) * p.x + std::cos(rot) * p.y} + shift;
  };
  std::vector<Point> verts;
  for (Point p : tri.vertices()) verts.push_back(move(p));
  SeedConfiguration moved = cfg;
  for (Point& p : moved.seeds) p = move(p);
  CHECK(evaluate_configuration(moved, ConvexPolygon(verts)).objective ==
        doctest::Approx(base.objective).epsilon(1e-10));
}

TEST_CASE("optimize k = 1") {
  const OptimizationTrace t = optimize(1, equilateral_triangle(1.0), 50, 1);
  CHECK(std::fabs(t.best_objective - (std::sqrt(kPi) + std::pow(3.0, 0.75))) < 1e-6);
  CHECK(t.bound_violations == 0);
}

TEST_CASE("optimize is deterministic and monotone") {
  OptimizeOptions opt;
  opt.restarts = 2;
  const ConvexPolygon tri = equilateral_triangle(1.0);
  const OptimizationTrace a = optimize(4, tri, 600, 7, opt);
  const OptimizationTrace b = optimize(4, tri, 600, 7, opt);
  CHECK(a.evaluations == 600);
  CHECK(a.best_objective == b.best_objective);
  REQUIRE(a.history.size() == b.history.size());
  for (std::size_t i = 0; i < a.history.size(); ++i) {
    CHECK(a.history[i] == b.history[i]);
    if (i > 0) CHECK(a.history[i].second <= a.history[i - 1].second);
  }
  CHECK(a.best_objective >= a.lower_bound);
  CHECK(a.min_scaled_evaluated >= hexagon_constant() - 1e-9);
  CHECK(a.bound_violations == 0);
  CHECK(a.seed_config.k() == 4);
  CHECK(evaluate_configuration(a.seed_config, tri).objective == a.best_objective);
}

TEST_CASE("honeycomb incumbent") {
  for (int l = 1; l <= 3; ++l) {
    const OptimizationTrace t = optimize_honeycomb(l, 40, 1);
    CHECK(std::fabs(t.ratio - 1.0) < 1e-9);
    CHECK(t.container_area == doctest::Approx(l * (l + 1) / 2.0));
  }
}

TEST_CASE("optimizer argument checks") {
  const ConvexPolygon tri = equilateral_triangle(1.0);
  CHECK_THROWS_AS(optimize(0, tri, 10, 1), DomainError);
  CHECK_THROWS_AS(optimize(2, tri, 0, 1), DomainError);
  CHECK_THROWS_AS(asymptotic_report({}, tri, 10, 1), DomainError);
  CHECK_THROWS_AS(asymptotic_report({4, 2}, tri, 10, 1), DomainError);
  const auto rows = asymptotic_report({1, 3}, tri, 60, 1);
  REQUIRE(rows.size() == 2);
  for (const AsymptoticRow& r : rows) CHECK(r.ratio >= 1.0 - 1e-9);
}
