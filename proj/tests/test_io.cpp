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


#include <regex>
#include <string>

#include "cheegerlab/fixtures.hpp"
#include "cheegerlab/json_io.hpp"
#include "cheegerlab/svg.hpp"
#include "doctest.h"

using namespace cheegerlab;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

std::size_t arc_commands(const std::string& svg) {
  const std::regex re("A [-0-9.e+]+ [-0-9.e+]+ 0 [01] [01] ");
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(svg.begin(), svg.end(), re),
                                                std::sregex_iterator()));
}

}  // namespace

TEST_CASE("numbers round-trip with 17 digits") {
  Json j;
  j["x"] = 0.1;
  j["y"] = 1.0 / 3.0;
  j["n"] = 3;
  j["inf"] = std::numeric_limits<double>::infinity();
  const std::string text = dump_json(j);
  CHECK(text.back() == '\n');
  CHECK(text.find("0.10000000000000001") != std::string::npos);
  const Json back = parse_json(text);
  CHECK(back["y"].get<double>() == 1.0 / 3.0);
  CHECK(back["inf"].is_null());
  CHECK(dump_json(back) == text);
  CHECK(dump_json(j, -1).find('\n') == dump_json(j, -1).size() - 1);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_json("{\n  \"a\": 1,\n  \"b\": ]\n}", "file.json");
    FAIL("expected a parse error");
  } catch (const JsonError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("file.json: line 3, column 8") != std::string::npos);
  }
}

TEST_CASE("schema and kind checks") {
  CHECK(artifact_kind(parse_json(R"({"vertices": [[0,0],[1,0],[0,1]]})")) == "polygon");
  CHECK_THROWS_AS(artifact_kind(parse_json(R"({"schema": 2, "vertices": []})")), JsonError);
  CHECK_THROWS_AS(expect_kind(artifact("cluster", Json::object()), "polygon"), JsonError);
  CHECK_THROWS_AS(artifact_kind(parse_json("[1, 2]")), JsonError);
  CHECK_THROWS_AS(artifact_kind(parse_json(R"({"foo": 1})")), JsonError);
  const Json a = artifact("polygon", to_json(unit_square()));
  CHECK(a.begin().key() == "schema");
  CHECK(artifact_kind(a) == "polygon");
}

TEST_CASE("geometry round trips") {
  const CurvedFixture fx = random_curved_domain(17);
  const ArcDomain back = domain_from_json(parse_json(dump_json(artifact("arc_domain", to_json(fx.domain)))));
  REQUIRE(back.boundary.size() == fx.domain.boundary.size());
  CHECK(back.h == fx.domain.h);
  CHECK(back.roles == fx.domain.roles);
  CHECK(signed_area(back.boundary) == doctest::Approx(signed_area(fx.domain.boundary)).epsilon(1e-14));

  const Cluster cl = honeycomb_cluster(3);
  const Json cj = artifact("cluster", to_json(cl));
  const Cluster cb = cluster_from_json(parse_json(dump_json(cj)));
  CHECK(cb.k() == cl.k());
  CHECK(cb.adjacency.size() == cl.adjacency.size());
  CHECK(cb.footprint.size() == cl.footprint.size());
  CHECK(dump_json(artifact("cluster", to_json(cb))) == dump_json(cj));

  const DiskChain ch = random_chain(ChainFlavor::sector, 4, 5);
  const DiskChain chb = chain_from_json(parse_json(dump_json(to_json(ch))));
  CHECK(chb.flavor == ch.flavor);
  CHECK(chb.centers == ch.centers);
  CHECK(chb.lines.size() == 2);

  CHECK_THROWS_AS(domain_from_json(parse_json(R"({"h": 1, "boundary": {"closed": true, "edges": []}, "roles": ["bogus"]})")),
                  JsonError);
  CHECK_THROWS_AS(curve_from_json(parse_json(R"({"closed": true, "edges": [{"kind": "spline"}]})")), JsonError);
}

TEST_CASE("run config rejects unknown keys") {
  const RunConfig c = run_config_from_json(parse_json(R"({"k": 4, "budget": 100, "seed": 3, "ks": [1, 4]})"));
  CHECK(c.k == 4);
  CHECK(c.budget == 100);
  CHECK(c.ks.size() == 2);
  CHECK_THROWS_AS(run_config_from_json(parse_json(R"({"k": 4, "budgte": 100})")), JsonError);
  CHECK_THROWS_AS(run_config_from_json(parse_json(R"({"k": 0})")), JsonError);
}

TEST_CASE("svg output") {
  const std::string circle = render_svg(circle_curve({0, 0}, 1.0));
  CHECK(count(circle, "<path") == 1);
  CHECK(arc_commands(circle) == 2);

  const Cluster cl = honeycomb_cluster(3);
  const std::string svg = render_svg(artifact("cluster", to_json(cl)));
  std::size_t edges = cl.container.size();
  for (const ArcDomain& d : cl.cells) edges += d.boundary.size();
  CHECK(count(svg, "<path") == edges);
  CHECK(count(svg, "class=\"cell\"") == 6);
  CHECK(count(svg, "class=\"container\"") == 1);
  CHECK(render_svg(cl) == svg);

  const std::string sq = render_svg(cheeger_set_domain(cheeger_convex(unit_square())));
  CHECK(arc_commands(sq) == 4);
  CHECK(count(sq, "L ") == 4);

  const std::string chain = render_svg(equilateral_chain());
  CHECK(count(chain, "<circle") == 3);
  CHECK(count(chain, "class=\"region\"") == 1);
  CHECK_THROWS_AS(render_svg(artifact("certificate", Json::object())), JsonError);
}
