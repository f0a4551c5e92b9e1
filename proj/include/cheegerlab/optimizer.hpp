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
#include <cstdint>
#include <utility>
#include <vector>

#include "cheegerlab/convex_polygon.hpp"

namespace cheegerlab {

// Power-diagram parametrization of convex k-tilings.
struct SeedConfiguration {
  std::vector<Point> seeds;
  std::vector<double> weights;
  std::size_t k() const { return seeds.size(); }
};

// Cell i = {x in container : |x - s_i|² - w_i <= |x - s_j|² - w_j for all j}.
// Throws DegenerateConfigurationError on an empty or sliver cell.
std::vector<ConvexPolygon> power_diagram_cells(const SeedConfiguration& cfg,
                                               const ConvexPolygon& container);

struct Evaluation {
  double objective = 0.0;  // max of the cell Cheeger constants, +inf if infeasible
  std::vector<double> h;
  std::vector<double> areas;
  std::vector<Point> centroids;
  bool feasible = false;
};

Evaluation evaluate_configuration(const SeedConfiguration& cfg, const ConvexPolygon& container);
// Cells are the convex intersections of power cells with hexagon tiles; a
// cell meeting more than one tile is infeasible.
Evaluation evaluate_on_footprint(const SeedConfiguration& cfg,
                                 const std::vector<ConvexPolygon>& footprint);

struct OptimizeOptions {
  int restarts = 8;
  int lloyd_iterations = 25;
  double balance_fraction = 0.35;  // share of each start's budget for weight balancing
  int degenerate_retry_cap = 100;
};

struct OptimizationTrace {
  std::size_t k = 0;
  double container_area = 0.0;
  double best_objective = 0.0;
  double scaled = 0.0;       // best · sqrt(area / k)
  double ratio = 0.0;        // scaled / h(H)
  double lower_bound = 0.0;  // h(H) sqrt(k / area)
  long evaluations = 0;
  long infeasible_evaluations = 0;
  // Smallest scaled objective over every feasible evaluation.
  double min_scaled_evaluated = 0.0;
  long bound_violations = 0;
  int best_start = 0;
  std::vector<std::pair<long, double>> history;  // (evaluation index, best so far)
  SeedConfiguration seed_config;
};

OptimizationTrace optimize(std::size_t k, const ConvexPolygon& container, long budget,
                           std::uint64_t seed, const OptimizeOptions& opt = {});

// Honeycomb k-triangle with its hexagon centers as the incumbent.
OptimizationTrace optimize_honeycomb(int l, long budget, std::uint64_t seed);

struct AsymptoticRow {
  std::size_t k = 0;
  double best_objective = 0.0;
  double scaled = 0.0;
  double ratio = 0.0;
};

std::vector<AsymptoticRow> asymptotic_report(const std::vector<std::size_t>& ks,
                                             const ConvexPolygon& container, long budget,
                                             std::uint64_t seed,
                                             const OptimizeOptions& opt = {});

// Hexagonal lattice points inside the container, k of them, nearest the centroid.
std::vector<Point> hex_lattice_seeds(std::size_t k, const ConvexPolygon& container);

}  // namespace cheegerlab
