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
#include <optional>
#include <random>

#include "cheegerlab/chamber.hpp"
#include "cheegerlab/errors.hpp"
#include "doctest.h"

using namespace cheegerlab;

namespace {

const double kSqrt3 = std::sqrt(3.0);

// Angles at P1 and P3 of the triangle of centers, by the law of cosines.
std::pair<double, double> triangle_angles(double r1, double r2, double r3, std::optional<double> l) {
  const double a = r1 + r2;
  const double b = l ? *l : r1 + r3;
  const double c = r2 + r3;
  return {std::acos((a * a + b * b - c * c) / (2 * a * b)),
          std::acos((c * c + b * b - a * a) / (2 * c * b))};
}

// Closed kite: D1 at the origin, D3 at (l, 0), D2 above and D4 below.
DiskChain kite(double r1, double r2, double r3, double r4, double l) {
  const TangencyGeometry up = tangency_geometry(r1, r2, r3, l);
  const TangencyGeometry dn = tangency_geometry(r1, r4, r3, l);
  DiskChain ch;
  ch.centers = {{0, 0}, {dn.x0, -dn.y0}, {l, 0}, {up.x0, up.y0}};
  ch.radii = {r1, r4, r3, r2};
  return ch;
}

DiskChain dilate(DiskChain ch, double s) {
  for (Point& p : ch.centers) p = p * s;
  for (double& r : ch.radii) r *= s;
  for (Line& l : ch.lines) l.point = l.point * s;
  return ch;
}

}  // namespace

TEST_CASE("reference areas") {
  const ReferenceAreas a = reference_areas(1.0);
  CHECK(a.delta == doctest::Approx(0.1612540).epsilon(1e-6));
  CHECK(a.corner == doctest::Approx(0.6848533).epsilon(1e-6));
  CHECK(a.wedge == doctest::Approx(0.4292037).epsilon(1e-6));
  const ReferenceAreas b = reference_areas(0.3);
  CHECK(b.delta == doctest::Approx(0.09 * a.delta));
  CHECK_THROWS_AS(reference_areas(0.0), DomainError);
}

TEST_CASE("closed-form chain fixtures") {
  const ReferenceAreas ref = reference_areas(1.0);
  struct Fixture {
    DiskChain chain;
    double expected;
  };
  const Fixture fixtures[] = {{equilateral_chain(), ref.delta},
                              {square_chain(), 4.0 - kPi},
                              {wedge_chain(), ref.wedge},
                              {half_plane_optimal_chain(), ref.delta + ref.wedge},
                              {corner_chain(), ref.corner}};
  for (const Fixture& f : fixtures) {
    const ChainRegion dec = chain_region_area(f.chain);
    CHECK(dec.method == "decomposition");
    CHECK(std::fabs(dec.area - f.expected) < 1e-6);
    ChainAreaOptions opt;
    opt.force_monte_carlo = true;
    opt.monte_carlo_samples = 1'000'000;
    const ChainRegion mc = chain_region_area(f.chain, opt);
    CHECK(mc.method == "monte_carlo");
    CHECK(mc.sample_error > 0.0);
    CHECK(std::fabs(mc.area - f.expected) < 3.0 * mc.sample_error);
  }
  CHECK(reference_areas(1.0).delta + reference_areas(1.0).wedge == doctest::Approx(0.5904577).epsilon(1e-6));
}

TEST_CASE("chain validation") {
  CHECK(validate_chain(equilateral_chain()).ok);
  CHECK(validate_chain(equilateral_chain()).warnings.empty());
  const ChainValidation opt = validate_chain(half_plane_optimal_chain());
  CHECK(opt.ok);
  CHECK_FALSE(opt.warnings.empty());  // D1 and D3 touch

  DiskChain bad = equilateral_chain();
  bad.centers[2].y += 0.1;
  CHECK_FALSE(validate_chain(bad).ok);
  CHECK_THROWS_AS(chain_region_area(bad), ValidationError);

  DiskChain reflex;
  reflex.centers = {{0, 0}, {2, 0}, {2 + 2 * std::cos(0.3), 2 * std::sin(0.3)}};
  reflex.radii = {1, 1, 1};
  CHECK_FALSE(validate_chain(reflex).ok);

  DiskChain hp = wedge_chain();
  hp.centers[0].y += 0.5;
  CHECK_FALSE(validate_chain(hp).ok);
  CHECK_THROWS_AS(verify_chain_bound(wedge_chain()), PreconditionError);
}

TEST_CASE("tangency geometry examples") {
  const TangencyGeometry g = tangency_geometry(1, 1, 1);
  CHECK(g.x0 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g.y0 == doctest::Approx(kSqrt3).epsilon(1e-15));
  CHECK(g.dtheta1 == doctest::Approx(1.0 / (2.0 * kSqrt3)).epsilon(1e-14));
  CHECK(g.dtheta3 == doctest::Approx(1.0 / (2.0 * kSqrt3)).epsilon(1e-14));
  const TangencyGeometry b = tangency_geometry(1, 1, 1, 3.0);
  CHECK(b.x0 == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(b.y0 == doctest::Approx(std::sqrt(1.75)).epsilon(1e-15));
  CHECK_THROWS_AS(tangency_geometry(1, 1, 1, 2.0), DomainError);
  CHECK_THROWS_AS(tangency_geometry(1, 1, 1, 1.5), DomainError);
  CHECK_THROWS_AS(tangency_geometry(1, 1, 1, 4.5), DomainError);
}

TEST_CASE("tangency derivatives match finite differences") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> rad(0.2, 2.0);
  std::uniform_real_distribution<double> frac(0.05, 0.95);
  const double step = 1e-6;
  for (int draw = 0; draw < 1000; ++draw) {
    const double r1 = rad(rng), r2 = rad(rng), r3 = rad(rng);
    std::optional<double> l;
    if (draw % 2 == 1) l = r1 + r3 + frac(rng) * 2.0 * r2;
    const TangencyGeometry g = tangency_geometry(r1, r2, r3, l);
    const auto plus = triangle_angles(r1, r2 + step, r3, l);
    const auto minus = triangle_angles(r1, r2 - step, r3, l);
    const double fd1 = (plus.first - minus.first) / (2 * step);
    const double fd3 = (plus.second - minus.second) / (2 * step);
    CHECK(g.dtheta1 > 0.0);
    CHECK(g.dtheta3 > 0.0);
    CHECK(std::fabs(fd1 - g.dtheta1) <= 1e-5 * std::max(1.0, g.dtheta1));
    CHECK(std::fabs(fd3 - g.dtheta3) <= 1e-5 * std::max(1.0, g.dtheta3));
    // The coordinates agree with the triangle they describe.
    const Point p2{g.x0, g.y0};
    CHECK(norm(p2) == doctest::Approx(r1 + r2).epsilon(1e-12));
    CHECK(distance(p2, {l ? *l : r1 + r3, 0.0}) == doctest::Approx(r2 + r3).epsilon(1e-12));
  }
}

TEST_CASE("phi functions") {
  const PhiMinimum pent = phi_minimum(PhiVariant::pentagon);
  CHECK(std::fabs(pent.t - kPi / 3.0) < 1e-12);
  CHECK(std::fabs(pent.value - (0.5 + kSqrt3 / 4.0)) < 1e-10);
  CHECK(std::fabs(phi(PhiVariant::sector, kPi / 2.0, 1.0) - (2.0 + kSqrt3)) < 1e-10);
  CHECK(std::fabs(phi(PhiVariant::sector, kPi / 2.0, 0.5) - 0.25 * (2.0 + kSqrt3)) < 1e-10);
  CHECK(phi_minimum(PhiVariant::sector, 1.0).value == doctest::Approx(2.0 + kSqrt3));
  for (double t = 0.0; t <= kPi; t += 0.1)
    CHECK(phi(PhiVariant::quadrilateral, t, 1.0) == doctest::Approx(std::sin(t)).epsilon(1e-12));
  CHECK(phi_minimum(PhiVariant::quadrilateral, 1.0).value == doctest::Approx(0.0));
  CHECK_THROWS_AS(phi(PhiVariant::pentagon, 1.2), DomainError);
  CHECK_THROWS_AS(phi(PhiVariant::sector, -0.1, 1.0), DomainError);
  CHECK_THROWS_AS(phi(PhiVariant::quadrilateral, 0.1, 3.5), DomainError);
}

TEST_CASE("quadrilateral derivative changes sign only at roots of p_l") {
  for (double l = 1.05; l < 2.9; l += 0.15) {
    const PhiRange d = phi_domain(PhiVariant::quadrilateral, l);
    const int n = 4000;
    const double h = (d.hi - d.lo) / n;
    auto deriv = [&](double t) {
      const double e = 1e-7;
      return (phi(PhiVariant::quadrilateral, std::min(t + e, d.hi), l) -
              phi(PhiVariant::quadrilateral, std::max(t - e, d.lo), l)) /
             (std::min(t + e, d.hi) - std::max(t - e, d.lo));
    };
    const double y_plus = (l + 1.0) / 2.0;
    const double y_minus = (l - 1.0) / 2.0;
    double prev = deriv(d.lo + 0.5 * h);
    for (int i = 1; i < n - 1; ++i) {
      const double t0 = d.lo + (i - 0.5) * h;
      const double t1 = d.lo + (i + 0.5) * h;
      const double cur = deriv(t1);
      if ((prev > 0) != (cur > 0) && std::fabs(prev) > 1e-9 && std::fabs(cur) > 1e-9) {
        const double c_lo = std::cos(t1) - 2 * h, c_hi = std::cos(t0) + 2 * h;
        const bool brackets = (y_plus >= c_lo && y_plus <= c_hi) || (y_minus >= c_lo && y_minus <= c_hi);
        CHECK(brackets);
      }
      prev = cur;
    }
  }
}

TEST_CASE("equal-radii extremal chains meet the bounds") {
  const ChainBound closed = verify_chain_bound(equilateral_chain());
  CHECK(closed.holds);
  CHECK(closed.area == doctest::Approx(closed.bound).epsilon(1e-12));
  const ChainBound hp = verify_chain_bound(half_plane_optimal_chain());
  CHECK(hp.holds);
  CHECK(hp.area == doctest::Approx(0.5904577).epsilon(1e-6));
  CHECK(hp.area == doctest::Approx(hp.bound).epsilon(1e-12));
}

TEST_CASE("random chains") {
  for (ChainFlavor f : {ChainFlavor::closed, ChainFlavor::half_plane, ChainFlavor::sector}) {
    for (int m = 3; m <= 6; ++m) {
      for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const DiskChain ch = random_chain(f, m, seed);
        const ChainValidation v = validate_chain(ch);
        CHECK(v.ok);
        CHECK(v.warnings.empty());
        CHECK(ch.size() == static_cast<std::size_t>(m));
        const ChainBound b = verify_chain_bound(ch);
        CHECK(b.holds);
        CHECK(b.region.method == "decomposition");
      }
    }
  }
  const DiskChain a = random_chain(ChainFlavor::sector, 5, 99);
  const DiskChain b = random_chain(ChainFlavor::sector, 5, 99);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.centers[i] == b.centers[i]);
    CHECK(a.radii[i] == b.radii[i]);
  }
  REQUIRE(a.lines.size() == 2);
  CHECK(std::fabs(std::atan2(cross(a.lines[0].direction, -a.lines[1].direction),
                             dot(a.lines[0].direction, -a.lines[1].direction)) -
                  kPi / 3.0) < 1e-15);
  CHECK_THROWS_AS(random_chain(ChainFlavor::closed, 2, 1), DomainError);
}

TEST_CASE("decomposition agrees with monte carlo on random chains") {
  ChainAreaOptions opt;
  opt.force_monte_carlo = true;
  opt.monte_carlo_samples = 250'000;
  int outside = 0;
  int total = 0;
  for (ChainFlavor f : {ChainFlavor::closed, ChainFlavor::half_plane, ChainFlavor::sector}) {
    for (int m = 3; m <= 6; ++m) {
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const DiskChain ch = random_chain(f, m, 1000 + seed);
        const ChainRegion dec = chain_region_area(ch);
        opt.seed = seed + 7;
        const ChainRegion mc = chain_region_area(ch, opt);
        if (std::fabs(dec.area - mc.area) > 3.0 * mc.sample_error) ++outside;
        ++total;
      }
    }
  }
  // 3σ two-sided: expected exceedances ~0.3% of draws.
  CHECK(outside <= 1);
  CHECK(total == 48);
}

TEST_CASE("shrinking the middle disk shrinks the region") {
  for (double l : {2.3, 2.6, 3.0}) {
    double prev = -1.0;
    for (double r2 = 1.6; r2 >= (l - 2.0) / 2.0 + 0.35; r2 -= 0.05) {
      const double area = chain_region_area(kite(1.0, r2, 1.0, 1.2, l)).area;
      if (prev >= 0.0) CHECK(area < prev);
      prev = area;
    }
  }
}

TEST_CASE("areas scale quadratically") {
  for (ChainFlavor f : {ChainFlavor::closed, ChainFlavor::half_plane, ChainFlavor::sector}) {
    const DiskChain ch = random_chain(f, 5, 3);
    const double a = chain_region_area(ch).area;
    for (double s : {0.25, 3.0}) CHECK(chain_region_area(dilate(ch, s)).area == doctest::Approx(s * s * a).epsilon(1e-12));
  }
}
