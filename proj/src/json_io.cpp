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


#include "cheegerlab/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <set>

namespace cheegerlab {

namespace {

void write_number(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

void write(std::string& out, const Json& j, int indent, int depth) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(d * indent), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += pretty ? ": " : ":";
        write(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Short numeric arrays (points, tuples) stay on one line.
      bool flat = j.size() <= 4;
      for (const Json& e : j) flat = flat && e.is_number();
      out += '[';
      bool first = true;
      for (const Json& e : j) {
        if (!first) out += flat && pretty ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        write(out, e, indent, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      write_number(out, j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw JsonError(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw JsonError(std::string("missing key \"") + key + "\"");
  return *it;
}

double number(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number()) throw JsonError(std::string("key \"") + key + "\" must be a number");
  return v.get<double>();
}

double as_number(const Json& v) {
  if (!v.is_number()) throw JsonError("expected a number");
  return v.get<double>();
}

std::size_t as_index(const Json& v) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw JsonError("expected a nonnegative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

Json point(Point p) { return Json::array({p.x, p.y}); }

Point as_point(const Json& v) {
  if (!v.is_array() || v.size() != 2) throw JsonError("a point must be [x, y]");
  return {as_number(v[0]), as_number(v[1])};
}

Json points(const std::vector<Point>& ps) {
  Json a = Json::array();
  for (Point p : ps) a.push_back(point(p));
  return a;
}

std::vector<Point> as_points(const Json& v) {
  if (!v.is_array()) throw JsonError("expected an array of points");
  std::vector<Point> out;
  for (const Json& e : v) out.push_back(as_point(e));
  return out;
}

Json doubles(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    const auto pos = what.find("syntax error");
    if (pos != std::string::npos) what = what.substr(pos);
    throw JsonError(source + ": line " + std::to_string(line) + ", column " + std::to_string(col) +
                    ": " + what);
  }
}

std::string dump_json(const Json& j, int indent) {
  std::string out;
  write(out, j, indent, 0);
  out += '\n';
  return out;
}

Json artifact(const std::string& kind, Json body) {
  Json out;
  out["schema"] = kSchemaVersion;
  out["kind"] = kind;
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  return out;
}

std::string artifact_kind(const Json& j) {
  if (!j.is_object()) throw JsonError("artifact must be a JSON object");
  if (j.contains("schema")) {
    const Json& s = j.at("schema");
    if (!s.is_number_integer() || s.get<long long>() != kSchemaVersion)
      throw JsonError("unsupported schema version " + s.dump());
  }
  if (j.contains("kind")) {
    if (!j.at("kind").is_string()) throw JsonError("\"kind\" must be a string");
    return j.at("kind").get<std::string>();
  }
  if (j.contains("vertices")) return "polygon";
  if (j.contains("edges")) return "arc_curve";
  if (j.contains("boundary") && j.contains("roles")) return "arc_domain";
  if (j.contains("cells")) return "cluster";
  if (j.contains("centers")) return "disk_chain";
  if (j.contains("seeds")) return "seed_configuration";
  if (j.contains("budget")) return "run_config";
  throw JsonError("cannot infer artifact kind");
}

void expect_kind(const Json& j, const std::string& expected) {
  const std::string k = artifact_kind(j);
  if (k != expected) throw JsonError("expected a " + expected + " artifact, got " + k);
}

Json to_json(const ConvexPolygon& p) {
  Json j;
  j["vertices"] = points(p.vertices());
  return j;
}

Json to_json(const Edge& e) {
  Json j;
  if (e.is_arc()) {
    const Arc& a = e.as_arc();
    j["kind"] = "arc";
    j["cx"] = a.center.x;
    j["cy"] = a.center.y;
    j["r"] = a.radius;
    j["a0"] = a.start_angle;
    j["a1"] = a.start_angle + a.signed_sweep();
    j["turn"] = a.turning;
  } else {
    const Segment& s = e.as_segment();
    j["kind"] = "seg";
    j["x0"] = s.start.x;
    j["y0"] = s.start.y;
    j["x1"] = s.end.x;
    j["y1"] = s.end.y;
  }
  return j;
}

Json to_json(const ArcCurve& c) {
  Json j;
  j["closed"] = c.closed();
  Json edges = Json::array();
  for (const Edge& e : c.edges()) edges.push_back(to_json(e));
  j["edges"] = edges;
  return j;
}

Json to_json(const ArcDomain& d) {
  Json j;
  j["h"] = d.h;
  j["boundary"] = to_json(d.boundary);
  Json roles = Json::array();
  for (EdgeRole r : d.roles) roles.push_back(role_name(r));
  j["roles"] = roles;
  return j;
}

Json to_json(const CheegerResult& r) {
  Json j;
  j["h"] = r.h;
  j["r"] = r.r;
  j["iterations"] = r.iterations;
  j["residual"] = r.residual;
  j["bracket"] = Json::array({r.bracket_lo, r.bracket_hi});
  j["area"] = r.area;
  j["perimeter"] = r.perimeter;
  j["cheeger_set"] = to_json(cheeger_set_domain(r));
  return j;
}

Json to_json(const StructureReport& r) {
  Json j;
  j["is_class_A"] = r.is_class_A;
  j["violations"] = r.violations;
  j["residuals_computed"] = r.residuals_computed;
  j["angle_rule_residual"] = r.angle_rule_residual;
  j["perimeter_residual"] = r.perimeter_residual;
  j["area_residual"] = r.area_residual;
  j["representation_residuals"] =
      Json::array({r.representation_residuals[0], r.representation_residuals[1]});
  j["free_groups"] = r.free_groups;
  j["junction_groups"] = r.junction_groups;
  j["perimeter"] = r.perimeter;
  j["area"] = r.area;
  j["inner_length"] = r.inner_length;
  j["inner_area"] = r.inner_area;
  return j;
}

Json to_json(const NodeSet& n) {
  Json j;
  j["nodes"] = points(n.nodes);
  Json exc = Json::array();
  for (bool b : n.exceptional) exc.push_back(b);
  j["exceptional"] = exc;
  j["edge_index"] = n.edge_index;
  return j;
}

Json to_json(const DeficitReport& r) {
  Json j;
  j["per_arc_x"] = doubles(r.per_arc_x);
  j["truncated_T"] = r.truncated_T;
  j["clamp_bound"] = r.clamp_bound;
  j["clamp_active"] = r.clamp_active;
  j["N"] = r.N;
  j["exceptional"] = r.exceptional;
  j["length"] = r.length;
  j["area"] = r.area;
  j["r_star"] = r.r_star;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["satisfied"] = r.satisfied;
  return j;
}

Json to_json(const Cluster& cl) {
  Json j;
  j["container"] = to_json(cl.container);
  j["domain_area"] = cl.domain_area;
  j["claimed_optimal_in_triangle"] = cl.claimed_optimal_in_triangle;
  Json cells = Json::array();
  for (const ArcDomain& d : cl.cells) cells.push_back(to_json(d));
  j["cells"] = cells;
  Json adj = Json::array();
  for (const SharedArc& a : cl.adjacency) adj.push_back(Json::array({a.cell_a, a.edge_a, a.cell_b, a.edge_b}));
  j["adjacency"] = adj;
  Json border = Json::array();
  for (const BorderContact& b : cl.border_contacts)
    border.push_back(Json::array({b.cell, b.edge_first, b.edge_count}));
  j["border_contacts"] = border;
  Json fp = Json::array();
  for (const ConvexPolygon& t : cl.footprint) fp.push_back(points(t.vertices()));
  j["footprint"] = fp;
  return j;
}

Json to_json(const CanonicalGraph& g) {
  Json j;
  j["vertex_count"] = g.vertex_count;
  Json in = Json::array(), out = Json::array();
  for (const auto& [a, b] : g.inner_edges) in.push_back(Json::array({a, b}));
  for (const auto& [a, b] : g.outer_edges) out.push_back(Json::array({a, b}));
  j["inner_edges"] = in;
  j["outer_edges"] = out;
  j["lambda"] = g.lambda;
  j["lambda_sum"] = g.lambda_sum;
  j["components"] = g.components;
  j["connected"] = g.connected;
  j["faces"] = g.faces;
  j["enumerated_faces"] = g.enumerated_faces ? Json(*g.enumerated_faces) : Json(nullptr);
  j["euler_residual"] = g.euler_residual;
  j["count_identity"] = g.count_identity;
  j["faces_hypothesis"] = g.faces_hypothesis;
  j["count_checked"] = g.count_checked;
  j["count_lhs"] = g.count_lhs;
  j["count_rhs"] = g.count_rhs;
  j["count_holds"] = g.count_holds;
  j["diagnostics"] = g.diagnostics;
  return j;
}

Json to_json(const ChamberReport& c) {
  Json j;
  j["area"] = c.area;
  j["bound"] = c.bound;
  j["r_star"] = c.r_star;
  j["applicable"] = c.applicable;
  j["holds"] = c.holds;
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["applicable"] = c.applicable;
  j["failing_rules"] = c.failing_rules;
  j["k"] = c.k;
  j["domain_area"] = c.domain_area;
  j["h_star"] = c.h_star;
  j["r_star"] = c.r_star;
  j["objective"] = c.objective;
  j["scaled_objective"] = c.scaled_objective;
  j["ratio"] = c.ratio;
  j["certified_lower_bound"] = c.certified_lower_bound;
  Json cells = Json::array();
  for (const CellCertificate& cc : c.per_cell) {
    Json e;
    e["cell"] = cc.cell;
    e["h"] = cc.h;
    e["area"] = cc.area;
    e["perimeter"] = cc.perimeter;
    e["inner_length"] = cc.inner_length;
    e["inner_area"] = cc.inner_area;
    e["structure"] = to_json(cc.structure);
    e["step1_lhs"] = cc.step1_lhs;
    e["step1_rhs"] = cc.step1_rhs;
    e["step1_holds"] = cc.step1_holds;
    e["largest_root"] = cc.largest_root;
    e["largest_root_holds"] = cc.largest_root_holds;
    e["hales"] = cc.hales ? to_json(*cc.hales) : Json(nullptr);
    e["lambda"] = cc.lambda;
    e["error"] = cc.error;
    cells.push_back(e);
  }
  j["per_cell"] = cells;
  j["sum_area"] = c.sum_area;
  j["sum_inner_length"] = c.sum_inner_length;
  j["sum_T"] = c.sum_T;
  j["sum_N"] = c.sum_N;
  j["sum_lambda"] = c.sum_lambda;
  j["deficit_sign_holds"] = c.deficit_sign_holds;
  j["node_count_holds"] = c.node_count_holds;
  j["mean6_holds"] = c.mean6_holds;
  j["endstep2_lhs"] = c.endstep2_lhs;
  j["endstep2_rhs"] = c.endstep2_rhs;
  j["endstep2_holds"] = c.endstep2_holds;
  j["boundbelow_rhs"] = c.boundbelow_rhs;
  j["boundbelow_holds"] = c.boundbelow_holds;
  j["chamber"] = to_json(c.chamber);
  j["boundabove_rhs"] = c.boundabove_rhs;
  j["boundabove_holds"] = c.boundabove_holds;
  j["final_lhs"] = c.final_lhs;
  j["final_rhs"] = c.final_rhs;
  j["holds"] = c.holds;
  return j;
}

Json to_json(const DiskChain& ch) {
  Json j;
  j["flavor"] = flavor_name(ch.flavor);
  j["centers"] = points(ch.centers);
  j["radii"] = doubles(ch.radii);
  Json lines = Json::array();
  for (const Line& l : ch.lines)
    lines.push_back(Json::array({l.point.x, l.point.y, l.direction.x, l.direction.y}));
  j["lines"] = lines;
  return j;
}

Json to_json(const ChainRegion& r) {
  Json j;
  j["area"] = r.area;
  j["method"] = r.method;
  j["sample_error"] = r.sample_error;
  j["samples"] = r.samples;
  return j;
}

Json to_json(const ChainBound& b) {
  Json j;
  j["area"] = b.area;
  j["bound"] = b.bound;
  j["r_star"] = b.r_star;
  j["holds"] = b.holds;
  j["region"] = to_json(b.region);
  j["warnings"] = b.warnings;
  return j;
}

Json to_json(const SeedConfiguration& cfg) {
  Json j;
  j["seeds"] = points(cfg.seeds);
  j["weights"] = doubles(cfg.weights);
  return j;
}

Json to_json(const OptimizationTrace& t) {
  Json j;
  j["k"] = t.k;
  j["container_area"] = t.container_area;
  j["best_objective"] = t.best_objective;
  j["scaled"] = t.scaled;
  j["ratio"] = t.ratio;
  j["lower_bound"] = t.lower_bound;
  j["evaluations"] = t.evaluations;
  j["infeasible_evaluations"] = t.infeasible_evaluations;
  j["min_scaled_evaluated"] = t.min_scaled_evaluated;
  j["bound_violations"] = t.bound_violations;
  j["best_start"] = t.best_start;
  Json hist = Json::array();
  for (const auto& [i, v] : t.history) hist.push_back(Json::array({i, v}));
  j["history"] = hist;
  j["seed_config"] = to_json(t.seed_config);
  return j;
}

Json to_json(const std::vector<AsymptoticRow>& rows) {
  Json a = Json::array();
  for (const AsymptoticRow& r : rows) {
    Json e;
    e["k"] = r.k;
    e["best_objective"] = r.best_objective;
    e["scaled"] = r.scaled;
    e["ratio"] = r.ratio;
    a.push_back(e);
  }
  return a;
}

ConvexPolygon polygon_from_json(const Json& j) {
  return ConvexPolygon(as_points(field(j, "vertices")));
}

ArcCurve curve_from_json(const Json& j) {
  // A domain is accepted in place of its boundary curve.
  const Json& b = j.is_object() && !j.contains("edges") && j.contains("boundary") ? j.at("boundary") : j;
  const Json& edges = field(b, "edges");
  if (!edges.is_array()) throw JsonError("\"edges\" must be an array");
  std::vector<Edge> out;
  for (const Json& e : edges) {
    const Json& kind = field(e, "kind");
    if (kind == "arc") {
      const double turn = number(e, "turn");
      if (turn != 1.0 && turn != -1.0) throw JsonError("arc \"turn\" must be 1 or -1");
      out.push_back(Edge::arc({number(e, "cx"), number(e, "cy")}, number(e, "r"), number(e, "a0"),
                              number(e, "a1"), static_cast<int>(turn)));
    } else if (kind == "seg") {
      out.push_back(Edge::segment({number(e, "x0"), number(e, "y0")}, {number(e, "x1"), number(e, "y1")}));
    } else {
      throw JsonError("unknown edge kind " + kind.dump());
    }
  }
  const Json& closed = field(b, "closed");
  if (!closed.is_boolean()) throw JsonError("\"closed\" must be a boolean");
  return ArcCurve(std::move(out), closed.get<bool>());
}

ArcDomain domain_from_json(const Json& j) {
  const Json& b = j.is_object() && j.contains("cheeger_set") ? j.at("cheeger_set") : j;
  ArcDomain d;
  d.h = number(b, "h");
  d.boundary = curve_from_json(field(b, "boundary"));
  const Json& roles = field(b, "roles");
  if (!roles.is_array()) throw JsonError("\"roles\" must be an array");
  for (const Json& r : roles) {
    if (!r.is_string()) throw JsonError("roles must be strings");
    const auto role = role_from_name(r.get<std::string>());
    if (!role) throw JsonError("unknown role \"" + r.get<std::string>() + "\"");
    d.roles.push_back(*role);
  }
  return d;
}

Cluster cluster_from_json(const Json& j) {
  Cluster cl;
  cl.container = polygon_from_json(field(j, "container"));
  cl.domain_area = j.contains("domain_area") ? number(j, "domain_area") : cl.container.area();
  if (j.contains("claimed_optimal_in_triangle")) {
    const Json& c = j.at("claimed_optimal_in_triangle");
    if (!c.is_boolean()) throw JsonError("\"claimed_optimal_in_triangle\" must be a boolean");
    cl.claimed_optimal_in_triangle = c.get<bool>();
  }
  for (const Json& c : field(j, "cells")) cl.cells.push_back(domain_from_json(c));
  if (j.contains("adjacency")) {
    for (const Json& a : j.at("adjacency")) {
      if (!a.is_array() || a.size() != 4) throw JsonError("adjacency entries are [cell_a, edge_a, cell_b, edge_b]");
      cl.adjacency.push_back({as_index(a[0]), as_index(a[1]), as_index(a[2]), as_index(a[3])});
    }
  }
  if (j.contains("border_contacts")) {
    for (const Json& b : j.at("border_contacts")) {
      if (!b.is_array() || b.size() != 3) throw JsonError("border contacts are [cell, edge_first, edge_count]");
      cl.border_contacts.push_back({as_index(b[0]), as_index(b[1]), as_index(b[2])});
    }
  }
  if (j.contains("footprint")) {
    for (const Json& t : j.at("footprint")) cl.footprint.emplace_back(as_points(t));
  }
  for (const SharedArc& a : cl.adjacency) {
    if (a.cell_a >= cl.k() || a.cell_b >= cl.k()) throw JsonError("adjacency names a missing cell");
  }
  for (const BorderContact& b : cl.border_contacts) {
    if (b.cell >= cl.k()) throw JsonError("border contact names a missing cell");
  }
  return cl;
}

DiskChain chain_from_json(const Json& j) {
  DiskChain ch;
  const Json& f = field(j, "flavor");
  if (!f.is_string()) throw JsonError("\"flavor\" must be a string");
  const auto flavor = flavor_from_name(f.get<std::string>());
  if (!flavor) throw JsonError("unknown chain flavor \"" + f.get<std::string>() + "\"");
  ch.flavor = *flavor;
  ch.centers = as_points(field(j, "centers"));
  for (const Json& r : field(j, "radii")) ch.radii.push_back(as_number(r));
  if (j.contains("lines")) {
    for (const Json& l : j.at("lines")) {
      if (!l.is_array() || l.size() != 4) throw JsonError("lines are [px, py, dx, dy]");
      ch.lines.push_back({{as_number(l[0]), as_number(l[1])}, {as_number(l[2]), as_number(l[3])}});
    }
  }
  return ch;
}

SeedConfiguration configuration_from_json(const Json& j) {
  const Json& b = j.is_object() && j.contains("seed_config") ? j.at("seed_config") : j;
  SeedConfiguration cfg;
  cfg.seeds = as_points(field(b, "seeds"));
  for (const Json& w : field(b, "weights")) cfg.weights.push_back(as_number(w));
  return cfg;
}

RunConfig run_config_from_json(const Json& j) {
  static const std::set<std::string> known{"schema", "kind", "k", "container", "budget",
                                           "restarts", "seed", "ks"};
  if (!j.is_object()) throw JsonError("run config must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) throw JsonError("unknown run config key \"" + it.key() + "\"");
  RunConfig c;
  auto integer = [&](const char* key, long long lo) {
    const Json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < lo)
      throw JsonError(std::string("\"") + key + "\" must be an integer >= " + std::to_string(lo));
    return v.get<long long>();
  };
  if (j.contains("k")) c.k = static_cast<std::size_t>(integer("k", 1));
  if (j.contains("budget")) c.budget = static_cast<long>(integer("budget", 1));
  if (j.contains("restarts")) c.restarts = static_cast<int>(integer("restarts", 0));
  if (j.contains("seed")) c.seed = static_cast<std::uint64_t>(integer("seed", 0));
  if (j.contains("container")) c.container = polygon_from_json(j.at("container"));
  if (j.contains("ks")) {
    for (const Json& k : j.at("ks")) c.ks.push_back(as_index(k));
  }
  return c;
}

Json to_json(const RunConfig& c) {
  Json j;
  j["k"] = c.k;
  j["container"] = to_json(c.container);
  j["budget"] = c.budget;
  j["restarts"] = c.restarts;
  j["seed"] = c.seed;
  j["ks"] = c.ks;
  return j;
}

}  // namespace cheegerlab
