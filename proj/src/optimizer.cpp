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


#include "cheegerlab/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "cheegerlab/cheeger.hpp"
#include "cheegerlab/cluster.hpp"
#include "cheegerlab/errors.hpp"
#include "cheegerlab/parallel.hpp"

namespace cheegerlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<Point> power_clip(std::vector<Point> poly, const SeedConfiguration& cfg, std::size_t i) {
  const Point si = cfg.seeds[i];
  for (std::size_t j = 0; j < cfg.k() && !poly.empty(); ++j) {
    if (j == i) continue;
    const Point sj = cfg.seeds[j];
    const Point n = (sj - si) * 2.0;
    const double c = dot(sj, sj) - dot(si, si) - cfg.weights[j] + cfg.weights[i];
    poly = clip_halfplane(poly, n, c);
  }
  return poly;
}

void check_configuration(const SeedConfiguration& cfg) {
  if (cfg.seeds.empty()) throw ValidationError("configuration has no seeds");
  if (cfg.weights.size() != cfg.seeds.size())
    throw ValidationError("configuration needs one weight per seed");
  for (std::size_t i = 0; i < cfg.k(); ++i) {
    if (!is_finite(cfg.seeds[i]) || !std::isfinite(cfg.weights[i]))
      throw ValidationError("configuration has non-finite entries");
  }
}

Evaluation score_cells(const std::vector<ConvexPolygon>& cells) {
  Evaluation ev;
  ev.feasible = true;
  ev.objective = 0.0;
  for (const ConvexPolygon& c : cells) {
    const double h = cheeger_convex(c).h;
    ev.h.push_back(h);
    ev.areas.push_back(c.area());
    ev.centroids.push_back(c.centroid());
    ev.objective = std::max(ev.objective, h);
  }
  return ev;
}

Evaluation infeasible() {
  Evaluation ev;
  ev.objective = kInf;
  return ev;
}

// Flattened coordinates: seeds in units of the spacing, weights in spacing².
struct Packing {
  double spacing = 1.0;
  std::vector<double> pack(const SeedConfiguration& c) const {
    std::vector<double> x;
    x.reserve(3 * c.k());
    for (std::size_t i = 0; i < c.k(); ++i) {
      x.push_back(c.seeds[i].x / spacing);
      x.push_back(c.seeds[i].y / spacing);
      x.push_back(c.weights[i] / (spacing * spacing));
    }
    return x;
  }
  SeedConfiguration unpack(const std::vector<double>& x) const {
    SeedConfiguration c;
    for (std::size_t i = 0; i + 2 < x.size(); i += 3) {
      c.seeds.push_back({x[i] * spacing, x[i + 1] * spacing});
      c.weights.push_back(x[i + 2] * spacing * spacing);
    }
    return c;
  }
};

class StartRunner {
 public:
  StartRunner(std::size_t k, const ConvexPolygon& container, long budget,
              const std::vector<ConvexPolygon>* footprint)
      : k_(k), container_(container), budget_(budget), footprint_(footprint) {
    packing_.spacing = std::sqrt(container.area() / static_cast<double>(k));
  }

  Evaluation eval(const SeedConfiguration& cfg) {
    Evaluation ev = footprint_ ? evaluate_on_footprint(cfg, *footprint_)
                               : evaluate_configuration(cfg, container_);
    values.push_back(ev.objective);
    if (ev.objective < best_value) {
      best_value = ev.objective;
      best = cfg;
      best_eval = ev;
    }
    return ev;
  }

  bool exhausted() const { return static_cast<long>(values.size()) >= budget_; }
  long remaining() const { return budget_ - static_cast<long>(values.size()); }

  void lloyd(int iterations, SeedConfiguration cur, Evaluation ev) {
    for (int it = 0; it < iterations && !exhausted() && ev.feasible; ++it) {
      cur.seeds = ev.centroids;
      std::fill(cur.weights.begin(), cur.weights.end(), 0.0);
      ev = eval(cur);
    }
  }

  void balance(long share) {
    const long stop = static_cast<long>(values.size()) + share;
    double c = 0.5;
    const double mean_area = container_.area() / static_cast<double>(k_);
    while (static_cast<long>(values.size()) < stop && !exhausted() && c > 1e-8 &&
           std::isfinite(best_value) && k_ > 1) {
      const Evaluation& ev = best_eval;
      const double hbar = std::accumulate(ev.h.begin(), ev.h.end(), 0.0) / static_cast<double>(k_);
      SeedConfiguration next = best;
      double wmean = 0.0;
      for (std::size_t i = 0; i < k_; ++i) {
        next.weights[i] += c * mean_area * (ev.h[i] - hbar) / hbar;
        wmean += next.weights[i];
      }
      wmean /= static_cast<double>(k_);
      for (double& w : next.weights) w -= wmean;
      const double before = best_value;
      eval(next);
      c = best_value < before ? c * 1.3 : c * 0.5;
    }
  }

  void nelder_mead() {
    if (!std::isfinite(best_value) || remaining() < 2) return;
    const std::vector<double> x0 = packing_.pack(best);
    const std::size_t n = x0.size();
    auto f = [&](const std::vector<double>& x) { return eval(packing_.unpack(x)).objective; };

    std::vector<std::vector<double>> simplex{x0};
    std::vector<double> fv{best_value};
    for (std::size_t i = 0; i < n && !exhausted(); ++i) {
      std::vector<double> x = x0;
      x[i] += 0.05;
      fv.push_back(f(x));
      simplex.push_back(std::move(x));
    }
    if (simplex.size() < n + 1) return;

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    while (!exhausted()) {
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
      const std::size_t ib = order.front(), iw = order.back(), is = order[n - 1];
      double size = 0.0;
      for (std::size_t v = 0; v <= n; ++v)
        for (std::size_t d = 0; d < n; ++d)
          size = std::max(size, std::fabs(simplex[v][d] - simplex[ib][d]));
      if (size < 1e-6) return;

      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t v = 0; v <= n; ++v) {
        if (v == iw) continue;
        for (std::size_t d = 0; d < n; ++d) centroid[d] += simplex[v][d];
      }
      for (double& c : centroid) c /= static_cast<double>(n);

      for (std::size_t d = 0; d < n; ++d) xr[d] = centroid[d] + (centroid[d] - simplex[iw][d]);
      const double fr = f(xr);
      if (fr < fv[ib]) {
        if (exhausted()) return;
        for (std::size_t d = 0; d < n; ++d) xe[d] = centroid[d] + 2.0 * (xr[d] - centroid[d]);
        const double fe = f(xe);
        if (fe < fr) {
          simplex[iw] = xe;
          fv[iw] = fe;
        } else {
          simplex[iw] = xr;
          fv[iw] = fr;
        }
        continue;
      }
      if (fr < fv[is]) {
        simplex[iw] = xr;
        fv[iw] = fr;
        continue;
      }
      if (exhausted()) return;
      const bool outside = fr < fv[iw];
      for (std::size_t d = 0; d < n; ++d)
        xc[d] = outside ? centroid[d] + 0.5 * (xr[d] - centroid[d])
                        : centroid[d] + 0.5 * (simplex[iw][d] - centroid[d]);
      const double fc = f(xc);
      if (fc < (outside ? fr : fv[iw])) {
        simplex[iw] = xc;
        fv[iw] = fc;
        continue;
      }
      for (std::size_t v = 0; v <= n && !exhausted(); ++v) {
        if (v == ib) continue;
        for (std::size_t d = 0; d < n; ++d)
          simplex[v][d] = simplex[ib][d] + 0.5 * (simplex[v][d] - simplex[ib][d]);
        fv[v] = f(simplex[v]);
      }
    }
  }

  std::vector<double> values;
  double best_value = kInf;
  SeedConfiguration best;
  Evaluation best_eval;

 private:
  std::size_t k_;
  const ConvexPolygon& container_;
  long budget_;
  const std::vector<ConvexPolygon>* footprint_;
  Packing packing_;
};

Point random_point(const ConvexPolygon& c, std::mt19937_64& rng) {
  BoundingBox box;
  for (Point p : c.vertices()) box.expand(p);
  std::uniform_real_distribution<double> ux(box.lo.x, box.hi.x), uy(box.lo.y, box.hi.y);
  for (;;) {
    const Point q{ux(rng), uy(rng)};
    if (c.contains(q)) return q;
  }
}

OptimizationTrace assemble(std::size_t k, double area, std::vector<StartRunner>& runs) {
  OptimizationTrace t;
  t.k = k;
  t.container_area = area;
  t.lower_bound = hexagon_constant() * std::sqrt(static_cast<double>(k) / area);
  t.best_objective = kInf;
  t.min_scaled_evaluated = kInf;
  const double scale = std::sqrt(area / static_cast<double>(k));
  long index = 0;
  double running = kInf;
  for (std::size_t s = 0; s < runs.size(); ++s) {
    for (double v : runs[s].values) {
      ++index;
      if (!std::isfinite(v)) {
        ++t.infeasible_evaluations;
        continue;
      }
      t.min_scaled_evaluated = std::min(t.min_scaled_evaluated, v * scale);
      if (v * scale < hexagon_constant() - 1e-9) ++t.bound_violations;
      if (v < running) {
        running = v;
        t.history.emplace_back(index, v);
      }
    }
    if (runs[s].best_value < t.best_objective) {
      t.best_objective = runs[s].best_value;
      t.best_start = static_cast<int>(s);
      t.seed_config = runs[s].best;
    }
  }
  t.evaluations = index;
  if (!std::isfinite(t.best_objective)) throw OptimizationError("no feasible configuration found");
  t.scaled = t.best_objective * scale;
  t.ratio = t.scaled / hexagon_constant();
  return t;
}

}  // namespace

std::vector<ConvexPolygon> power_diagram_cells(const SeedConfiguration& cfg,
                                               const ConvexPolygon& container) {
  check_configuration(cfg);
  std::vector<ConvexPolygon> cells;
  cells.reserve(cfg.k());
  const double min_area = 1e-12 * container.area();
  for (std::size_t i = 0; i < cfg.k(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (cfg.seeds[i] == cfg.seeds[j]) throw DegenerateConfigurationError("coincident seeds");
    const std::vector<Point> poly = power_clip(container.vertices(), cfg, i);
    if (poly.size() < 3 || polygon_signed_area(poly) <= min_area)
      throw DegenerateConfigurationError("empty power cell " + std::to_string(i));
    try {
      cells.emplace_back(poly);
    } catch (const ValidationError&) {
      throw DegenerateConfigurationError("sliver power cell " + std::to_string(i));
    }
  }
  return cells;
}

Evaluation evaluate_configuration(const SeedConfiguration& cfg, const ConvexPolygon& container) {
  for (Point s : cfg.seeds)
    if (!container.contains(s)) return infeasible();
  try {
    return score_cells(power_diagram_cells(cfg, container));
  } catch (const Error&) {
    return infeasible();
  }
}

Evaluation evaluate_on_footprint(const SeedConfiguration& cfg,
                                 const std::vector<ConvexPolygon>& footprint) {
  check_configuration(cfg);
  std::vector<ConvexPolygon> cells;
  try {
    for (std::size_t i = 0; i < cfg.k(); ++i) {
      std::vector<Point> piece;
      int pieces = 0;
      for (const ConvexPolygon& tile : footprint) {
        std::vector<Point> p = power_clip(tile.vertices(), cfg, i);
        if (p.size() >= 3 && polygon_signed_area(p) > 1e-10 * tile.area()) {
          ++pieces;
          piece = std::move(p);
        }
      }
      if (pieces != 1) return infeasible();
      cells.emplace_back(piece);
    }
    return score_cells(cells);
  } catch (const Error&) {
    return infeasible();
  }
}

std::vector<Point> hex_lattice_seeds(std::size_t k, const ConvexPolygon& container) {
  if (k == 0) throw DomainError("k must be positive");
  const Point c = container.centroid();
  if (k == 1) return {c};
  const double s0 = std::sqrt(2.0 * container.area() / (std::sqrt(3.0) * static_cast<double>(k)));
  const std::vector<Point>& v = container.vertices();
  for (double f = 1.0; f > 0.05; f *= 0.97) {
    const double s = s0 * f;
    const double margin = 0.3 * s;
    std::vector<Point> pts;
    BoundingBox box;
    for (Point p : v) box.expand(p);
    const int nr = static_cast<int>(std::ceil(box.diagonal() / (s * std::sqrt(3.0) / 2.0))) + 1;
    const int nq = static_cast<int>(std::ceil(box.diagonal() / s)) + 1;
    for (int r = -nr; r <= nr; ++r) {
      for (int q = -nq; q <= nq; ++q) {
        const Point p = c + Point{s * (q + 0.5 * r), s * std::sqrt(3.0) / 2.0 * r};
        bool inside = true;
        for (std::size_t e = 0; e < v.size() && inside; ++e)
          inside = cross(unit(v[(e + 1) % v.size()] - v[e]), p - v[e]) >= margin;
        if (inside) pts.push_back(p);
      }
    }
    if (pts.size() < k) continue;
    std::stable_sort(pts.begin(), pts.end(), [&](Point a, Point b) {
      const double da = distance(a, c), db = distance(b, c);
      if (std::fabs(da - db) > 1e-12 * s) return da < db;
      return angle_of(a - c) < angle_of(b - c);
    });
    pts.resize(k);
    return pts;
  }
  throw GenerationError("could not place lattice seeds");
}

OptimizationTrace optimize(std::size_t k, const ConvexPolygon& container, long budget,
                           std::uint64_t seed, const OptimizeOptions& opt) {
  if (k < 1) throw DomainError("optimize: k must be at least 1");
  if (budget < 1) throw DomainError("optimize: budget must be at least 1");
  if (opt.restarts < 0) throw DomainError("optimize: restarts must be nonnegative");
  const long starts = std::min<long>(opt.restarts + 1, budget);
  std::vector<StartRunner> runs;
  runs.reserve(static_cast<std::size_t>(starts));
  for (long s = 0; s < starts; ++s) {
    const long share = budget / starts + (s < budget % starts ? 1 : 0);
    runs.emplace_back(k, container, share, nullptr);
  }

  parallel_for(static_cast<std::size_t>(starts), [&](std::size_t s) {
    StartRunner& run = runs[s];
    std::mt19937_64 rng(mix(seed ^ mix(s)));
    SeedConfiguration cfg;
    cfg.weights.assign(k, 0.0);
    int attempts = 0;
    Evaluation first;
    for (;;) {
      if (s == 0 && attempts == 0) {
        cfg.seeds = hex_lattice_seeds(k, container);
      } else {
        cfg.seeds.clear();
        for (std::size_t i = 0; i < k; ++i) cfg.seeds.push_back(random_point(container, rng));
      }
      ++attempts;
      first = run.eval(cfg);
      if (std::isfinite(run.best_value) || run.exhausted()) break;
      if (attempts >= opt.degenerate_retry_cap)
        throw OptimizationError("optimize: degenerate initial configurations beyond retry cap");
    }
    run.lloyd(opt.lloyd_iterations, cfg, first);
    run.balance(static_cast<long>(opt.balance_fraction * static_cast<double>(run.remaining())));
    run.nelder_mead();
  });
  return assemble(k, container.area(), runs);
}

OptimizationTrace optimize_honeycomb(int l, long budget, std::uint64_t seed) {
  (void)seed;  // the incumbent start is deterministic
  if (budget < 1) throw DomainError("optimize: budget must be at least 1");
  const Cluster cl = honeycomb_cluster(l);
  SeedConfiguration cfg;
  for (const ConvexPolygon& tile : cl.footprint) cfg.seeds.push_back(tile.centroid());
  cfg.weights.assign(cfg.k(), 0.0);
  std::vector<StartRunner> runs;
  runs.emplace_back(cl.k(), cl.container, budget, &cl.footprint);
  runs[0].eval(cfg);
  runs[0].nelder_mead();
  OptimizationTrace t = assemble(cl.k(), cl.domain_area, runs);
  return t;
}

std::vector<AsymptoticRow> asymptotic_report(const std::vector<std::size_t>& ks,
                                             const ConvexPolygon& container, long budget,
                                             std::uint64_t seed, const OptimizeOptions& opt) {
  if (ks.empty()) throw DomainError("asymptotic_report: ks is empty");
  for (std::size_t i = 1; i < ks.size(); ++i)
    if (ks[i] <= ks[i - 1]) throw DomainError("asymptotic_report: ks must increase");
  std::vector<AsymptoticRow> rows;
  for (std::size_t k : ks) {
    const OptimizationTrace t = optimize(k, container, budget, seed, opt);
    rows.push_back({k, t.best_objective, t.scaled, t.ratio});
  }
  return rows;
}

}  // namespace cheegerlab
