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


#include "cheegerlab/chamber.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <sstream>

#include "cheegerlab/errors.hpp"
#include "cheegerlab/parallel.hpp"

namespace cheegerlab {

namespace {

const double kSqrt3 = std::sqrt(3.0);

double signed_distance(const Line& line, Point p) {
  return cross(unit(line.direction), p - line.point);
}

Point foot(const Line& line, Point p) {
  const Point d = unit(line.direction);
  return line.point + d * dot(p - line.point, d);
}

Point intersect(const Line& a, const Line& b) {
  const double den = cross(a.direction, b.direction);
  if (std::fabs(den) < 1e-15) throw ValidationError("sector lines are parallel");
  const double s = cross(b.point - a.point, b.direction) / den;
  return a.point + a.direction * s;
}

std::size_t required_lines(ChainFlavor f) {
  switch (f) {
    case ChainFlavor::closed: return 0;
    case ChainFlavor::half_plane: return 1;
    case ChainFlavor::sector: return 2;
  }
  return 0;
}

std::size_t minimum_disks(ChainFlavor f) {
  switch (f) {
    case ChainFlavor::closed: return 3;
    case ChainFlavor::half_plane: return 2;
    case ChainFlavor::sector: return 1;
  }
  return 3;
}

std::string fmt(const char* what, std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << what << " (" << i << ", " << j << ")";
  return os.str();
}

std::string fmt(const char* what, std::size_t i) {
  std::ostringstream os;
  os << what << " " << i;
  return os.str();
}

// Raw polygon in chain order; index of P_1 inside it.
std::vector<Point> raw_polygon(const DiskChain& ch, std::size_t& first_center) {
  std::vector<Point> poly;
  first_center = 0;
  switch (ch.flavor) {
    case ChainFlavor::closed:
      poly = ch.centers;
      break;
    case ChainFlavor::half_plane:
      poly.push_back(foot(ch.lines[0], ch.centers.front()));
      first_center = 1;
      poly.insert(poly.end(), ch.centers.begin(), ch.centers.end());
      poly.push_back(foot(ch.lines[0], ch.centers.back()));
      break;
    case ChainFlavor::sector:
      poly.push_back(intersect(ch.lines[0], ch.lines[1]));
      poly.push_back(foot(ch.lines[0], ch.centers.front()));
      first_center = 2;
      poly.insert(poly.end(), ch.centers.begin(), ch.centers.end());
      poly.push_back(foot(ch.lines[1], ch.centers.back()));
      break;
  }
  return poly;
}

double shoelace(const std::vector<Point>& p) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += cross(p[i], p[(i + 1) % p.size()]);
  return 0.5 * s;
}

double segment_distance(Point q, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  double t = len2 > 0.0 ? dot(q - a, d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(q, a + d * t);
}

// Interior angle at vertex i of a counterclockwise polygon.
double interior_angle(const std::vector<Point>& p, std::size_t i) {
  const std::size_t n = p.size();
  const Point a = p[(i + n - 1) % n] - p[i];
  const Point b = p[(i + 1) % n] - p[i];
  const double t = std::atan2(cross(b, a), dot(a, b));
  return t < 0.0 ? t + kTwoPi : t;
}

bool point_in_polygon(const std::vector<Point>& p, Point q) {
  bool inside = false;
  for (std::size_t i = 0, j = p.size() - 1; i < p.size(); j = i++) {
    if ((p[i].y > q.y) != (p[j].y > q.y)) {
      const double x = p[j].x + (q.y - p[j].y) * (p[i].x - p[j].x) / (p[i].y - p[j].y);
      if (q.x < x) inside = !inside;
    }
  }
  return inside;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

ReferenceAreas reference_areas(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("reference_areas: r must be positive");
  const double r2 = r * r;
  return {r2 * (2.0 * kSqrt3 - kPi) / 2.0, r2 * (2.0 - kPi / 2.0),
          r2 * (3.0 * kSqrt3 - kPi) / 3.0};
}

const char* flavor_name(ChainFlavor f) {
  switch (f) {
    case ChainFlavor::closed: return "closed";
    case ChainFlavor::half_plane: return "half_plane";
    case ChainFlavor::sector: return "sector";
  }
  return "closed";
}

std::optional<ChainFlavor> flavor_from_name(const std::string& name) {
  if (name == "closed") return ChainFlavor::closed;
  if (name == "half_plane") return ChainFlavor::half_plane;
  if (name == "sector") return ChainFlavor::sector;
  return std::nullopt;
}

ChainValidation validate_chain(const DiskChain& ch, double tol) {
  ChainValidation v;
  auto fail = [&](std::string s) {
    v.ok = false;
    v.errors.push_back(std::move(s));
  };
  const std::size_t m = ch.centers.size();
  if (ch.radii.size() != m) {
    fail("centers and radii differ in length");
    return v;
  }
  if (m < minimum_disks(ch.flavor)) {
    fail(fmt("too few disks for flavor:", m));
    return v;
  }
  if (ch.lines.size() != required_lines(ch.flavor)) {
    fail(fmt("wrong number of boundary lines:", ch.lines.size()));
    return v;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_finite(ch.centers[i]) || !(ch.radii[i] > 0.0) || !std::isfinite(ch.radii[i]))
      fail(fmt("invalid disk", i));
  }
  for (const Line& l : ch.lines) {
    if (!is_finite(l.point) || !is_finite(l.direction) || norm(l.direction) < 1e-300)
      fail("invalid boundary line");
  }
  if (!v.ok) return v;

  const bool wrap = ch.flavor == ChainFlavor::closed;
  auto consecutive = [&](std::size_t i, std::size_t j) {
    return j == i + 1 || i == j + 1 || (wrap && ((i == 0 && j == m - 1) || (j == 0 && i == m - 1)));
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double d = distance(ch.centers[i], ch.centers[j]);
      const double s = ch.radii[i] + ch.radii[j];
      if (consecutive(i, j)) {
        if (std::fabs(d - s) > tol * s) fail(fmt("consecutive disks not tangent", i, j));
      } else if (d < s * (1.0 - tol)) {
        fail(fmt("non-consecutive disks overlap", i, j));
      } else if (d <= s * (1.0 + tol)) {
        v.warnings.push_back(fmt("non-consecutive disks touch", i, j));
      }
    }
  }

  if (!ch.lines.empty()) {
    const Line& first = ch.lines.front();
    const Line& last = ch.lines.back();
    if (std::fabs(signed_distance(first, ch.centers.front()) - ch.radii.front()) >
        tol * ch.radii.front())
      fail("first disk not tangent to its line");
    if (std::fabs(signed_distance(last, ch.centers.back()) - ch.radii.back()) >
        tol * ch.radii.back())
      fail("last disk not tangent to its line");
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < ch.lines.size(); ++k) {
        const double sd = signed_distance(ch.lines[k], ch.centers[i]);
        const bool own = (i == 0 && k == 0) || (i == m - 1 && k + 1 == ch.lines.size());
        if (sd < ch.radii[i] * (1.0 - tol)) {
          fail(fmt("disk crosses boundary line", i, k));
        } else if (!own && sd <= ch.radii[i] * (1.0 + tol)) {
          v.warnings.push_back(fmt("disk touches boundary line", i, k));
        }
      }
    }
  }
  if (!v.ok) return v;

  std::size_t first_center = 0;
  std::vector<Point> poly = raw_polygon(ch, first_center);
  const double orient = shoelace(poly) >= 0.0 ? 1.0 : -1.0;
  double total_turn = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = poly[i] - poly[(i + n - 1) % n];
    const Point b = poly[(i + 1) % n] - poly[i];
    const double turn = orient * std::atan2(cross(a, b), dot(a, b));
    total_turn += turn;
    const bool is_center = i >= first_center && i < first_center + m;
    if (turn < -tol) {
      fail(is_center ? fmt("reflex angle at disk", i - first_center)
                     : fmt("reflex angle at auxiliary vertex", i));
    } else if (turn <= tol) {
      v.warnings.push_back(is_center ? fmt("straight angle at disk", i - first_center)
                                     : fmt("straight angle at auxiliary vertex", i));
    }
  }
  if (v.ok && std::fabs(total_turn - kTwoPi) > 1e-6)
    fail("center polygon is not simple");
  return v;
}

std::vector<Point> chain_polygon(const DiskChain& ch) {
  std::size_t first = 0;
  std::vector<Point> p = raw_polygon(ch, first);
  if (shoelace(p) < 0.0) std::reverse(p.begin(), p.end());
  return p;
}

bool decomposition_applies(const DiskChain& ch, double tol) {
  const ChainValidation v = validate_chain(ch, tol);
  if (!v.ok) return false;
  for (const std::string& w : v.warnings)
    if (w.rfind("straight angle", 0) == 0) return false;
  std::size_t first = 0;
  const std::vector<Point> poly = raw_polygon(ch, first);
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < ch.size(); ++i) {
    const std::size_t vi = first + i;
    for (std::size_t e = 0; e < n; ++e) {
      const std::size_t f = (e + 1) % n;
      if (e == vi || f == vi) continue;
      if (segment_distance(ch.centers[i], poly[e], poly[f]) < ch.radii[i] * (1.0 - tol))
        return false;
    }
  }
  return true;
}

ChainRegion chain_region_monte_carlo(const DiskChain& ch, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw DomainError("monte carlo needs at least one sample");
  const std::vector<Point> poly = chain_polygon(ch);
  BoundingBox box;
  for (Point p : poly) box.expand(p);
  const std::size_t g = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(samples))));
  const double dx = box.width() / static_cast<double>(g);
  const double dy = box.height() / static_cast<double>(g);
  std::vector<std::size_t> hits(g, 0);

  parallel_for(g, [&](std::size_t row) {
    std::mt19937_64 rng(splitmix(seed ^ splitmix(row)));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::size_t count = 0;
    for (std::size_t col = 0; col < g; ++col) {
      const Point q{box.lo.x + (static_cast<double>(col) + u(rng)) * dx,
                    box.lo.y + (static_cast<double>(row) + u(rng)) * dy};
      bool in = point_in_polygon(poly, q);
      for (std::size_t k = 0; in && k < ch.lines.size(); ++k)
        in = signed_distance(ch.lines[k], q) >= 0.0;
      for (std::size_t i = 0; in && i < ch.size(); ++i) {
        const Point d = q - ch.centers[i];
        in = dot(d, d) > ch.radii[i] * ch.radii[i];
      }
      if (in) ++count;
    }
    hits[row] = count;
  });

  std::size_t total = 0;
  for (std::size_t h : hits) total += h;
  const double n = static_cast<double>(g * g);
  const double p = static_cast<double>(total) / n;
  const double box_area = box.width() * box.height();
  ChainRegion out;
  out.area = box_area * p;
  out.sample_error = box_area * std::sqrt(p * (1.0 - p) / n);
  out.method = "monte_carlo";
  out.samples = g * g;
  return out;
}

ChainRegion chain_region_area(const DiskChain& ch, const ChainAreaOptions& opt) {
  const ChainValidation v = validate_chain(ch);
  if (!v.ok) {
    std::string msg = "invalid disk chain:";
    for (const std::string& e : v.errors) msg += " " + e + ";";
    throw ValidationError(msg);
  }
  if (opt.force_monte_carlo || !decomposition_applies(ch))
    return chain_region_monte_carlo(ch, opt.monte_carlo_samples, opt.seed);

  std::size_t first = 0;
  std::vector<Point> poly = raw_polygon(ch, first);
  const bool flipped = shoelace(poly) < 0.0;
  if (flipped) std::reverse(poly.begin(), poly.end());
  double area = shoelace(poly);
  for (std::size_t i = 0; i < ch.size(); ++i) {
    const std::size_t vi = flipped ? poly.size() - 1 - (first + i) : first + i;
    area -= 0.5 * interior_angle(poly, vi) * ch.radii[i] * ch.radii[i];
  }
  ChainRegion out;
  out.area = std::max(area, 0.0);
  out.method = "decomposition";
  return out;
}

ChainBound verify_chain_bound(const DiskChain& ch, const ChainAreaOptions& opt) {
  const std::size_t m = ch.size();
  if (m < 3) throw PreconditionError("verify_chain_bound needs at least three disks");
  ChainBound b;
  b.warnings = validate_chain(ch).warnings;
  b.region = chain_region_area(ch, opt);
  b.area = b.region.area;
  b.r_star = *std::min_element(ch.radii.begin(), ch.radii.end());
  const ReferenceAreas ref = reference_areas(b.r_star);
  b.bound = static_cast<double>(m - 2) * ref.delta;
  if (ch.flavor != ChainFlavor::closed) b.bound += ref.wedge;
  if (ch.flavor == ChainFlavor::sector) b.bound += ref.corner;
  const double tol = 1e-9 * b.r_star * b.r_star * static_cast<double>(m) + 3.0 * b.region.sample_error;
  b.holds = b.area >= b.bound - tol;
  return b;
}

TangencyGeometry tangency_geometry(double r1, double r2, double r3, std::optional<double> l) {
  if (!(r1 > 0.0) || !(r2 > 0.0) || !(r3 > 0.0))
    throw DomainError("tangency_geometry: radii must be positive");
  TangencyGeometry g;
  if (!l) {
    const double s = r1 + r3;
    g.x0 = (r1 * r1 + s * s + 2.0 * r1 * r2 - r3 * r3 - 2.0 * r3 * r2) / (2.0 * s);
    const double num = (r1 - r3) * (s + 2.0 * r2) + s * s;
    g.y0 = std::sqrt((r1 + r2) * (r1 + r2) - num * num / (4.0 * s * s));
    const double root =
        std::sqrt(-r1 * r3 * (s * s - (s + 2.0 * r2) * (s + 2.0 * r2)) / (s * s));
    g.dtheta1 = 2.0 * r1 * r3 / (s * (r1 + r2) * root);
    g.dtheta3 = 2.0 * r1 * r3 / (s * (r2 + r3) * root);
    return g;
  }
  const double L = *l;
  if (!(L > r1 + r3)) throw DomainError("tangency_geometry: l must exceed r1 + r3");
  const double reach = r1 + r3 + 2.0 * r2;
  if (!(L < reach)) throw DomainError("tangency_geometry: no disk of radius r2 touches both");
  g.x0 = (L * L + r1 * r1 + 2.0 * r1 * r2 - r3 * r3 - 2.0 * r3 * r2) / (2.0 * L);
  const double num = L * L + (r1 - r3) * (r1 + r3 + 2.0 * r2);
  g.y0 = std::sqrt((r1 + r2) * (r1 + r2) - num * num / (4.0 * L * L));
  const double q = (L + r1 - r3) * (L - r1 + r3);
  const double root = std::sqrt(-q * (L * L - reach * reach) / (L * L));
  g.dtheta1 = q / (L * (r1 + r2) * root);
  g.dtheta3 = q / (L * (r3 + r2) * root);
  return g;
}

PhiRange phi_domain(PhiVariant v, double aux) {
  switch (v) {
    case PhiVariant::quadrilateral: {
      if (!(aux > 0.0)) throw DomainError("phi: l must be positive");
      const double c = (aux * aux - 3.0) / (2.0 * aux);
      if (c > 1.0) throw DomainError("phi: quadrilateral is empty for this l");
      return {0.0, std::acos(std::max(c, -1.0))};
    }
    case PhiVariant::pentagon:
      return {0.0, kPi / 3.0};
    case PhiVariant::sector:
      if (!(aux > 0.0)) throw DomainError("phi: r_star must be positive");
      return {0.0, kPi / 2.0};
  }
  return {0.0, 0.0};
}

double phi(PhiVariant v, double t, double aux) {
  const PhiRange d = phi_domain(v, aux);
  const double slack = 1e-12;
  if (!(t >= d.lo - slack && t <= d.hi + slack)) throw DomainError("phi: t outside its interval");
  t = std::clamp(t, d.lo, d.hi);
  switch (v) {
    case PhiVariant::quadrilateral: {
      const double l = aux;
      const double c = std::cos(t);
      const double rad = (l * l - 2.0 * l * c + 1.0) * (-l * l + 2.0 * l * c + 3.0);
      return 0.25 * std::sqrt(std::max(rad, 0.0)) + 0.5 * l * std::sin(t);
    }
    case PhiVariant::pentagon:
      return std::cos(t) * (1.0 + std::sin(t));
    case PhiVariant::sector:
      return aux * aux / 3.0 *
             (6.0 * std::sin(t) + 3.0 * std::sin(2.0 * t) + 6.0 * kSqrt3 * std::cos(t) +
              kSqrt3 * std::cos(2.0 * t) + 4.0 * kSqrt3);
  }
  return 0.0;
}

PhiMinimum phi_minimum(PhiVariant v, double aux) {
  const PhiRange d = phi_domain(v, aux);
  constexpr int kGrid = 4096;
  const double step = (d.hi - d.lo) / kGrid;
  int best = 0;
  double best_val = phi(v, d.lo, aux);
  for (int i = 1; i <= kGrid; ++i) {
    const double val = phi(v, i == kGrid ? d.hi : d.lo + i * step, aux);
    if (val < best_val) {
      best_val = val;
      best = i;
    }
  }
  PhiMinimum out{best == kGrid ? d.hi : d.lo + best * step, best_val};
  if (best == 0 || best == kGrid || step == 0.0) return out;
  double a = d.lo + (best - 1) * step;
  double b = d.lo + (best + 1) * step;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a);
  double e = a + gr * (b - a);
  double fc = phi(v, c, aux);
  double fe = phi(v, e, aux);
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    if (fc < fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - gr * (b - a);
      fc = phi(v, c, aux);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + gr * (b - a);
      fe = phi(v, e, aux);
    }
  }
  const double t = 0.5 * (a + b);
  const double val = phi(v, t, aux);
  if (val < out.value) out = {t, val};
  return out;
}

namespace {

struct StrictCheck {
  bool operator()(const DiskChain& ch) const {
    const ChainValidation v = validate_chain(ch, 1e-9);
    if (!v.ok || !v.warnings.empty()) return false;
    // Keep a visible margin away from the degenerate limits.
    const std::size_t m = ch.size();
    const bool wrap = ch.flavor == ChainFlavor::closed;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const bool cons = j == i + 1 || (wrap && i == 0 && j == m - 1);
        if (!cons && distance(ch.centers[i], ch.centers[j]) < (ch.radii[i] + ch.radii[j]) * (1.0 + 1e-6))
          return false;
      }
      for (std::size_t k = 0; k < ch.lines.size(); ++k) {
        const bool own = (i == 0 && k == 0) || (i == m - 1 && k + 1 == ch.lines.size());
        if (!own && signed_distance(ch.lines[k], ch.centers[i]) < ch.radii[i] * (1.0 + 1e-6))
          return false;
      }
    }
    const std::vector<Point> poly = chain_polygon(ch);
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point a = poly[i] - poly[(i + n - 1) % n];
      const Point b = poly[(i + 1) % n] - poly[i];
      if (std::atan2(cross(a, b), dot(a, b)) < 1e-6) return false;
    }
    return decomposition_applies(ch);
  }
};

// Sorted headings strictly inside (lo, hi).
std::vector<double> sorted_headings(std::mt19937_64& rng, std::size_t count, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> h(count);
  for (double& x : h) x = u(rng);
  std::sort(h.begin(), h.end());
  return h;
}

std::vector<Point> circle_circle(Point a, double ra, Point b, double rb) {
  const double d = distance(a, b);
  if (d <= 0.0 || d > ra + rb || d < std::fabs(ra - rb)) return {};
  const double x = (d * d + ra * ra - rb * rb) / (2.0 * d);
  const double y2 = ra * ra - x * x;
  if (y2 < 0.0) return {};
  const Point e = (b - a) / d;
  const Point mid = a + e * x;
  const double y = std::sqrt(y2);
  return {mid + perp(e) * y, mid - perp(e) * y};
}

// Centers at signed distance r from `line` and distance R from `p`.
std::vector<Point> circle_line(const Line& line, double r, Point p, double R) {
  const Point d = unit(line.direction);
  const Point base = line.point + perp(d) * r;
  const Point w = base - p;
  const double bq = dot(d, w);
  const double disc = bq * bq - (dot(w, w) - R * R);
  if (disc < 0.0) return {};
  const double s = std::sqrt(disc);
  return {base + d * (-bq + s), base + d * (-bq - s)};
}

}  // namespace

DiskChain random_chain(ChainFlavor flavor, int m, std::uint64_t seed) {
  if (m < 3) throw DomainError("random_chain: m must be at least 3");
  std::mt19937_64 rng(splitmix(seed));
  std::uniform_real_distribution<double> radius(0.5, 1.5);
  const StrictCheck strict;
  const std::size_t n = static_cast<std::size_t>(m);
  constexpr int kBudget = 200000;

  for (int attempt = 0; attempt < kBudget; ++attempt) {
    DiskChain ch;
    ch.flavor = flavor;
    ch.radii.resize(n);
    for (double& r : ch.radii) r = radius(rng);
    std::vector<double> heading;
    switch (flavor) {
      case ChainFlavor::closed: {
        heading = sorted_headings(rng, n - 2, 0.0, kTwoPi);
        heading.front() = 0.0;
        std::sort(heading.begin(), heading.end());
        ch.centers.push_back({0.0, 0.0});
        break;
      }
      case ChainFlavor::half_plane: {
        ch.lines.push_back({{0.0, 0.0}, {1.0, 0.0}});
        heading = sorted_headings(rng, n - 2, kPi / 2.0, 1.5 * kPi);
        ch.centers.push_back({0.0, ch.radii[0]});
        break;
      }
      case ChainFlavor::sector: {
        ch.lines.push_back({{0.0, 0.0}, {1.0, 0.0}});
        ch.lines.push_back({{0.0, 0.0}, {-0.5, -kSqrt3 / 2.0}});
        heading = sorted_headings(rng, n - 2, kPi / 2.0, 5.0 * kPi / 6.0);
        std::uniform_real_distribution<double> x1(1.0, 12.0);
        ch.centers.push_back({x1(rng), ch.radii[0]});
        break;
      }
    }
    for (std::size_t i = 0; i + 2 < n; ++i) {
      const Point p = ch.centers.back();
      ch.centers.push_back(p + polar(ch.radii[i] + ch.radii[i + 1], heading[i]));
    }
    const Point prev = ch.centers.back();
    const double R = ch.radii[n - 2] + ch.radii[n - 1];
    std::vector<Point> candidates;
    switch (flavor) {
      case ChainFlavor::closed:
        candidates = circle_circle(prev, R, ch.centers.front(), ch.radii[n - 1] + ch.radii[0]);
        break;
      case ChainFlavor::half_plane:
      case ChainFlavor::sector:
        candidates = circle_line(ch.lines.back(), ch.radii[n - 1], prev, R);
        break;
    }
    for (Point c : candidates) {
      DiskChain trial = ch;
      trial.centers.push_back(c);
      if (strict(trial)) return trial;
    }
  }
  throw GenerationError("random_chain: rejection budget exhausted");
}

DiskChain equilateral_chain(double r) {
  DiskChain ch;
  ch.centers = {{0.0, 0.0}, {2.0 * r, 0.0}, {r, kSqrt3 * r}};
  ch.radii = {r, r, r};
  return ch;
}

DiskChain square_chain(double r) {
  DiskChain ch;
  ch.centers = {{0.0, 0.0}, {2.0 * r, 0.0}, {2.0 * r, 2.0 * r}, {0.0, 2.0 * r}};
  ch.radii = {r, r, r, r};
  return ch;
}

DiskChain wedge_chain(double r) {
  DiskChain ch;
  ch.flavor = ChainFlavor::half_plane;
  ch.lines = {{{0.0, 0.0}, {1.0, 0.0}}};
  ch.centers = {{2.0 * r, r}, {0.0, r}};
  ch.radii = {r, r};
  return ch;
}

DiskChain half_plane_optimal_chain(double r) {
  DiskChain ch;
  ch.flavor = ChainFlavor::half_plane;
  ch.lines = {{{0.0, 0.0}, {1.0, 0.0}}};
  ch.centers = {{2.0 * r, r}, {r, r + kSqrt3 * r}, {0.0, r}};
  ch.radii = {r, r, r};
  return ch;
}

DiskChain corner_chain(double r) {
  DiskChain ch;
  ch.flavor = ChainFlavor::sector;
  ch.lines = {{{0.0, 0.0}, {1.0, 0.0}}, {{0.0, 0.0}, {-0.5, -kSqrt3 / 2.0}}};
  ch.centers = {{kSqrt3 * r, r}};
  ch.radii = {r};
  return ch;
}

}  // namespace cheegerlab
