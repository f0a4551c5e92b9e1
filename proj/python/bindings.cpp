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

// JSON-string bindings; the Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "cheegerlab/chamber.hpp"
#include "cheegerlab/cheeger.hpp"
#include "cheegerlab/cluster.hpp"
#include "cheegerlab/hales.hpp"
#include "cheegerlab/json_io.hpp"
#include "cheegerlab/optimizer.hpp"
#include "cheegerlab/parallel.hpp"
#include "cheegerlab/svg.hpp"

namespace py = pybind11;
using namespace cheegerlab;

namespace {

ClampMode clamp_mode(const std::string& s) {
  if (s == "scaled") return ClampMode::scaled;
  if (s == "literal") return ClampMode::literal;
  throw ValidationError("unknown clamp mode " + s);
}

ArcDomain as_domain(const Json& j) {
  const std::string kind = artifact_kind(j);
  if (kind == "polygon") return cheeger_set_domain(cheeger_convex(polygon_from_json(j)));
  return domain_from_json(j);
}

std::string cheeger(const std::string& text, double tol) {
  const Json j = parse_json(text);
  expect_kind(j, "polygon");
  return dump_json(artifact("cheeger_result", to_json(cheeger_convex(polygon_from_json(j), tol))));
}

std::string structure(const std::string& text) {
  return dump_json(artifact("structure_report", to_json(structure_report(as_domain(parse_json(text))))));
}

std::string hales(const std::string& text, const std::string& clamp) {
  const Json j = parse_json(text);
  const std::string kind = artifact_kind(j);
  DeficitReport rep;
  if (kind == "arc_curve" || kind == "polygon") {
    const ArcCurve c = kind == "polygon" ? polygon_from_json(j).boundary() : curve_from_json(j);
    rep = hales_check(c, vertex_nodes(c), std::sqrt(std::fabs(signed_area(c)) / kPi), clamp_mode(clamp));
  } else {
    const ArcDomain d = as_domain(j);
    const OffsetResult inner = inner_cheeger_boundary(d);
    rep = hales_check(inner.curve, place_nodes(inner, d), d.r(), clamp_mode(clamp));
  }
  return dump_json(artifact("deficit_report", to_json(rep)));
}

std::string certificate(const std::string& text, const std::string& clamp) {
  const Json j = parse_json(text);
  expect_kind(j, "cluster");
  return dump_json(artifact("certificate", to_json(lower_bound_certificate(cluster_from_json(j), clamp_mode(clamp)))));
}

std::string honeycomb(std::optional<int> l, std::optional<std::vector<std::pair<int, int>>> cells) {
  if (l.has_value() == cells.has_value()) throw ValidationError("pass exactly one of l or cells");
  const Cluster cl = l ? honeycomb_cluster(*l) : honeycomb_cell_cluster(*cells);
  return dump_json(artifact("cluster", to_json(cl)));
}

std::string graph(const std::string& text) {
  const Json j = parse_json(text);
  expect_kind(j, "cluster");
  return dump_json(artifact("canonical_graph", to_json(canonical_graph(cluster_from_json(j)))));
}

std::string chain_bound(const std::string& text, std::size_t samples, std::uint64_t seed, bool monte_carlo) {
  const Json j = parse_json(text);
  expect_kind(j, "disk_chain");
  ChainAreaOptions opt;
  opt.monte_carlo_samples = samples;
  opt.seed = seed;
  opt.force_monte_carlo = monte_carlo;
  return dump_json(artifact("chain_bound", to_json(verify_chain_bound(chain_from_json(j), opt))));
}

std::string make_random_chain(const std::string& flavor, int m, std::uint64_t seed) {
  const auto f = flavor_from_name(flavor);
  if (!f) throw ValidationError("unknown chain flavor " + flavor);
  return dump_json(artifact("disk_chain", to_json(random_chain(*f, m, seed))));
}

std::string run_optimize(std::size_t k, long budget, std::uint64_t seed, int restarts,
                         std::optional<std::string> container) {
  const ConvexPolygon c = container ? polygon_from_json(parse_json(*container)) : equilateral_triangle(1.0);
  OptimizeOptions opt;
  opt.restarts = restarts;
  return dump_json(artifact("optimization_trace", to_json(optimize(k, c, budget, seed, opt))));
}

std::string run_asymptotic(const std::vector<std::size_t>& ks, long budget, std::uint64_t seed, int restarts) {
  OptimizeOptions opt;
  opt.restarts = restarts;
  Json body;
  body["rows"] = to_json(asymptotic_report(ks, equilateral_triangle(1.0), budget, seed, opt));
  return dump_json(artifact("asymptotic_table", body));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "cheegerlab native core";

  static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
  static py::exception<ValidationError> validation(m, "ValidationError", base.ptr());
  static py::exception<SolverError> solver(m, "SolverError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      py::set_error(validation, e.what());
    } catch (const SolverError& e) {
      py::set_error(solver, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("hexagon_constant", &hexagon_constant);
  m.def("set_threads", [](unsigned n) { set_thread_count(n); }, py::arg("n"));
  m.def("cheeger", &cheeger, py::arg("polygon"), py::arg("tol") = 1e-13);
  m.def("structure", &structure, py::arg("domain"));
  m.def("hales", &hales, py::arg("geometry"), py::arg("clamp") = "scaled");
  m.def("certificate", &certificate, py::arg("cluster"), py::arg("clamp") = "scaled");
  m.def("honeycomb", &honeycomb, py::arg("l") = py::none(), py::arg("cells") = py::none());
  m.def("canonical_graph", &graph, py::arg("cluster"));
  m.def("chain_bound", &chain_bound, py::arg("chain"), py::arg("samples") = 10'000'000,
        py::arg("seed") = 1, py::arg("monte_carlo") = false);
  m.def("random_chain", &make_random_chain, py::arg("flavor"), py::arg("m"), py::arg("seed"));
  m.def("optimize", &run_optimize, py::arg("k"), py::arg("budget") = 20000, py::arg("seed") = 1,
        py::arg("restarts") = 8, py::arg("container") = py::none(), py::call_guard<py::gil_scoped_release>());
  m.def("asymptotic_report", &run_asymptotic, py::arg("ks"), py::arg("budget") = 20000, py::arg("seed") = 1,
        py::arg("restarts") = 8, py::call_guard<py::gil_scoped_release>());
  m.def("render_svg", [](const std::string& text) { return render_svg(parse_json(text)); }, py::arg("geometry"));
}
