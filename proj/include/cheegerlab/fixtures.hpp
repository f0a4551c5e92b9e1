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

#include <cstdint>

#include "cheegerlab/cheeger.hpp"
#include "cheegerlab/convex_polygon.hpp"

namespace cheegerlab {

// n points on a random ellipse at random angles (minimum angular gap
// enforced), randomly rotated and translated.
ConvexPolygon random_convex_polygon(int n, std::uint64_t seed);

// A curvilinear polygon K with segment, bulging and concave arc sides,
// dilated by a disk of radius r = sqrt(|K|/π). The result is its own
// Cheeger set, with free arcs around the corners of K and inner junction
// arcs parallel to its sides; its inner Cheeger boundary is ∂K.
struct CurvedFixture {
  ArcDomain domain;
  ArcCurve kernel;  // ∂K
  int corners = 0;
};
CurvedFixture random_curved_domain(std::uint64_t seed);

// K ⊕ B_r for a closed counterclockwise kernel with convex corners and
// concave sides of radius > r. Sides become inner junction arcs, corners
// free arcs, and h is set to 1/r.
CurvedFixture dilated_kernel(const ArcCurve& kernel, double r);

// Convex hull of two disks of radius R with centers 2d apart; the flat
// sides are labeled inner junction and the caps free.
ArcDomain stadium_domain(double R = 1.0, double half_gap = 1.0);
// Disk of radius R labeled as a single free arc with h = 1/R.
ArcDomain ball_domain(double R = 1.0);

}  // namespace cheegerlab
