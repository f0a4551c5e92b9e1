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
#include <optional>
#include <string>
#include <vector>

#include "cheegerlab/geometry.hpp"

namespace cheegerlab {

struct ReferenceAreas {
  double delta = 0.0;   // three mutually tangent radius-r disks
  double wedge = 0.0;   // two tangent disks and a common tangent line
  double corner = 0.0;  // a disk inscribed in a π/3 angle, near the apex
};
ReferenceAreas reference_areas(double r);

enum class ChainFlavor { closed, half_plane, sector };
const char* flavor_name(ChainFlavor f);
std::optional<ChainFlavor> flavor_from_name(const std::string& name);

// Oriented line; the admissible side is on the left of `direction`.
struct Line {
  Point point;
  Point direction;
};

// half_plane uses one line (D_1 and D_m both tangent to it); sector uses
// two lines through the apex, D_1 tangent to the first and D_m to the second.
struct DiskChain {
  std::vector<Point> centers;
  std::vector<double> radii;
  ChainFlavor flavor = ChainFlavor::closed;
  std::vector<Line> lines;

  std::size_t size() const { return centers.size(); }
};

struct ChainValidation {
  bool ok = true;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;  // degenerate but admissible limits
};

ChainValidation validate_chain(const DiskChain& ch, double tol = 1e-9);

// Polygon through the centers, closed through the tangency feet on the
// lines (and the apex for a sector), counterclockwise.
std::vector<Point> chain_polygon(const DiskChain& ch);

struct ChainRegion {
  double area = 0.0;
  std::string method;  // "decomposition" or "monte_carlo"
  double sample_error = 0.0;
  std::size_t samples = 0;
};

struct ChainAreaOptions {
  std::size_t monte_carlo_samples = 10'000'000;
  std::uint64_t seed = 1;
  bool force_monte_carlo = false;
};

// Area of the bounded holes enclosed by the chain (and its lines).
ChainRegion chain_region_area(const DiskChain& ch, const ChainAreaOptions& opt = {});
ChainRegion chain_region_monte_carlo(const DiskChain& ch, std::size_t samples, std::uint64_t seed);
// True when the polygon-minus-sectors formula applies.
bool decomposition_applies(const DiskChain& ch, double tol = 1e-9);

struct ChainBound {
  double area = 0.0;
  double bound = 0.0;
  double r_star = 0.0;
  bool holds = false;
  ChainRegion region;
  std::vector<std::string> warnings;
};
ChainBound verify_chain_bound(const DiskChain& ch, const ChainAreaOptions& opt = {});

struct TangencyGeometry {
  double x0 = 0.0;
  double y0 = 0.0;
  double dtheta1 = 0.0;  // ∂θ_1/∂r_2
  double dtheta3 = 0.0;  // ∂θ_3/∂r_2
};
// Middle disk tangent to D_1 at the origin and D_3 at (l, 0); without l,
// D_1 and D_3 are tangent (l = r1 + r3).
TangencyGeometry tangency_geometry(double r1, double r2, double r3, std::optional<double> l = {});

enum class PhiVariant { quadrilateral, pentagon, sector };
// aux is l for the quadrilateral and r_* for the sector; unused otherwise.
double phi(PhiVariant v, double t, double aux = 1.0);
struct PhiRange {
  double lo = 0.0;
  double hi = 0.0;
};
PhiRange phi_domain(PhiVariant v, double aux = 1.0);
struct PhiMinimum {
  double t = 0.0;
  double value = 0.0;
};
// Dense grid over the domain followed by golden-section refinement.
PhiMinimum phi_minimum(PhiVariant v, double aux = 1.0);

// Rejection-sampled chain satisfying the strict hypotheses; bitwise
// deterministic for a given seed.
DiskChain random_chain(ChainFlavor flavor, int m, std::uint64_t seed);

// Extremal configurations with equal radii r.
DiskChain equilateral_chain(double r = 1.0);           // closed, m = 3
DiskChain square_chain(double r = 1.0);                // closed, m = 4
DiskChain wedge_chain(double r = 1.0);                 // half plane, m = 2
DiskChain half_plane_optimal_chain(double r = 1.0);    // half plane, m = 3
DiskChain corner_chain(double r = 1.0);                // sector, m = 1

}  // namespace cheegerlab
