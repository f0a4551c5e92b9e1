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
#include <vector>

#include "cheegerlab/arc_curve.hpp"
#include "cheegerlab/chamber.hpp"
#include "cheegerlab/cheeger.hpp"
#include "cheegerlab/cluster.hpp"
#include "cheegerlab/convex_polygon.hpp"
#include "cheegerlab/errors.hpp"
#include "cheegerlab/hales.hpp"
#include "cheegerlab/optimizer.hpp"
#include "json.hpp"

namespace cheegerlab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Malformed JSON text or an artifact that does not decode.
class JsonError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Parses text; syntax errors report "line L, column C".
Json parse_json(const std::string& text, const std::string& source = "input");
// Deterministic text: numbers with 17 significant digits, non-finite as null.
// indent < 0 writes a single line. Always newline-terminated.
std::string dump_json(const Json& j, int indent = 2);

// Top-level artifact with "schema" and "kind" first.
Json artifact(const std::string& kind, Json body);
// Checks the schema version (absent is accepted) and, when present, that
// "kind" equals `expected`. Returns the kind, inferred from keys if absent.
std::string artifact_kind(const Json& j);
void expect_kind(const Json& j, const std::string& expected);

Json to_json(const ConvexPolygon& p);
Json to_json(const Edge& e);
Json to_json(const ArcCurve& c);
Json to_json(const ArcDomain& d);
Json to_json(const CheegerResult& r);
Json to_json(const StructureReport& r);
Json to_json(const NodeSet& n);
Json to_json(const DeficitReport& r);
Json to_json(const Cluster& cl);
Json to_json(const CanonicalGraph& g);
Json to_json(const ChamberReport& c);
Json to_json(const Certificate& c);
Json to_json(const DiskChain& ch);
Json to_json(const ChainRegion& r);
Json to_json(const ChainBound& b);
Json to_json(const SeedConfiguration& cfg);
Json to_json(const OptimizationTrace& t);
Json to_json(const std::vector<AsymptoticRow>& rows);

ConvexPolygon polygon_from_json(const Json& j);
ArcCurve curve_from_json(const Json& j);
ArcDomain domain_from_json(const Json& j);
Cluster cluster_from_json(const Json& j);
DiskChain chain_from_json(const Json& j);
SeedConfiguration configuration_from_json(const Json& j);

// Optimizer run description; unknown keys are rejected.
struct RunConfig {
  std::size_t k = 1;
  ConvexPolygon container = equilateral_triangle(1.0);
  long budget = 20000;
  int restarts = 8;
  std::uint64_t seed = 1;
  std::vector<std::size_t> ks;  // optional asymptotic table
};
RunConfig run_config_from_json(const Json& j);
Json to_json(const RunConfig& c);

}  // namespace cheegerlab
