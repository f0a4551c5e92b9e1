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

#include <string>

#include "cheegerlab/json_io.hpp"

namespace cheegerlab {

// SVG 1.1 document for a geometry artifact: polygon, arc_curve, arc_domain,
// cheeger_result, cluster or disk_chain. Every edge becomes one <path> with
// true arc commands. Throws JsonError for other kinds.
std::string render_svg(const Json& artifact);

std::string render_svg(const ArcCurve& c);
std::string render_svg(const ArcDomain& d);
std::string render_svg(const Cluster& cl);
std::string render_svg(const DiskChain& ch);

}  // namespace cheegerlab
