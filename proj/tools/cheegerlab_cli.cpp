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
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cheegerlab/chamber.hpp"
#include "cheegerlab/cheeger.hpp"
#include "cheegerlab/cluster.hpp"
#include "cheegerlab/errors.hpp"
#include "cheegerlab/hales.hpp"
#include "cheegerlab/json_io.hpp"
#include "cheegerlab/optimizer.hpp"
#include "cheegerlab/parallel.hpp"
#include "cheegerlab/svg.hpp"

using namespace cheegerlab;

namespace {

struct Io {
  std::string input;
  std::string output;
};

struct Tolerances {
  double tol = 1e-13;
  double chain_tol = 1e-9;
  StructureOptions structure;
  std::string clamp = "scaled";
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load(const Io& io) {
  const std::string src = io.input.empty() || io.input == "-" ? "stdin" : io.input;
  return parse_json(read_input(io.input), src);
}

void write_output(const Io& io, const std::string& text) {
  if (io.output.empty() || io.output == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(io.output, std::ios::binary);
  if (!out) throw ValidationError("cannot open output file " + io.output);
  out << text;
}

ClampMode clamp_mode(const std::string& s) {
  if (s == "scaled") return ClampMode::scaled;
  if (s == "literal") return ClampMode::literal;
  throw ValidationError("unknown clamp mode " + s);
}

// Polygons are replaced by their Cheeger sets.
ArcDomain load_domain(const Json& j, const Tolerances& t) {
  const std::string kind = artifact_kind(j);
  if (kind == "polygon") return cheeger_set_domain(cheeger_convex(polygon_from_json(j), t.tol));
  if (kind != "arc_domain" && kind != "cheeger_result")
    throw JsonError("expected a domain, cheeger_result or polygon artifact, got " + kind);
  return domain_from_json(j);
}

std::string cmd_cheeger(const Io& io, const Tolerances& t) {
  const Json j = load(io);
  expect_kind(j, "polygon");
  return dump_json(artifact("cheeger_result", to_json(cheeger_convex(polygon_from_json(j), t.tol))));
}

std::string cmd_structure(const Io& io, const Tolerances& t) {
  const ArcDomain d = load_domain(load(io), t);
  return dump_json(artifact("structure_report", to_json(structure_report(d, t.structure))));
}

std::string cmd_hales(const Io& io, const Tolerances& t) {
  const Json j = load(io);
  const std::string kind = artifact_kind(j);
  const ClampMode mode = clamp_mode(t.clamp);
  DeficitReport rep;
  if (kind == "arc_curve" || kind == "polygon") {
    // A bare curve is tested with its vertices as nodes at its own area scale.
    const ArcCurve c = kind == "polygon" ? polygon_from_json(j).boundary() : curve_from_json(j);
    const double r_star = std::sqrt(std::fabs(signed_area(c)) / kPi);
    rep = hales_check(c, vertex_nodes(c), r_star, mode);
  } else {
    const ArcDomain d = load_domain(j, t);
    const OffsetResult inner = inner_cheeger_boundary(d, t.structure);
    rep = hales_check(inner.curve, place_nodes(inner, d), d.r(), mode);
  }
  return dump_json(artifact("deficit_report", to_json(rep)));
}

std::string cmd_certificate(const Io& io, const Tolerances& t) {
  const Json j = load(io);
  expect_kind(j, "cluster");
  const Cluster cl = cluster_from_json(j);
  return dump_json(artifact("certificate", to_json(lower_bound_certificate(cl, clamp_mode(t.clamp)))));
}

std::vector<std::pair<int, int>> parse_cells(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    int q = 0, r = 0;
    char comma = 0;
    std::istringstream is(item);
    if (!(is >> q >> comma >> r) || comma != ',' || !(is >> std::ws).eof())
      throw ValidationError("malformed cell \"" + item + "\", expected q,r");
    out.emplace_back(q, r);
  }
  if (out.empty()) throw ValidationError("--cells needs at least one q,r pair");
  return out;
}

struct ChainArgs {
  bool sweep = false;
  std::string flavor = "all";
  std::vector<int> ms{3, 4, 5, 6};
  long count = 100;
  std::uint64_t seed = 1;
  std::size_t samples = 10'000'000;
  bool monte_carlo = false;
};

std::string cmd_chain(const Io& io, const Tolerances& t, const ChainArgs& a) {
  ChainAreaOptions opt;
  opt.monte_carlo_samples = a.samples;
  opt.seed = a.seed;
  opt.force_monte_carlo = a.monte_carlo;
  if (!a.sweep) {
    const Json j = load(io);
    expect_kind(j, "disk_chain");
    const DiskChain ch = chain_from_json(j);
    const ChainValidation v = validate_chain(ch, t.chain_tol);
    if (!v.ok) {
      std::string msg = "invalid chain";
      for (const std::string& e : v.errors) msg += "; " + e;
      throw ValidationError(msg);
    }
    return dump_json(artifact("chain_bound", to_json(verify_chain_bound(ch, opt))));
  }
  std::vector<ChainFlavor> flavors;
  if (a.flavor == "all") {
    flavors = {ChainFlavor::closed, ChainFlavor::half_plane, ChainFlavor::sector};
  } else {
    const auto f = flavor_from_name(a.flavor);
    if (!f) throw ValidationError("unknown chain flavor " + a.flavor);
    flavors = {*f};
  }
  if (a.count < 1) throw ValidationError("--count must be positive");
  std::string out;
  long total = 0, violations = 0;
  for (ChainFlavor f : flavors) {
    for (int m : a.ms) {
      for (long i = 0; i < a.count; ++i) {
        const std::uint64_t s = a.seed + static_cast<std::uint64_t>(i);
        const ChainBound b = verify_chain_bound(random_chain(f, m, s), opt);
        Json rec;
        rec["kind"] = "chain_record";
        rec["flavor"] = flavor_name(f);
        rec["m"] = m;
        rec["seed"] = s;
        rec["area"] = b.area;
        rec["bound"] = b.bound;
        rec["method"] = b.region.method;
        rec["holds"] = b.holds;
        out += dump_json(rec, -1);
        ++total;
        if (!b.holds) ++violations;
      }
    }
  }
  Json sum;
  sum["kind"] = "chain_sweep_summary";
  sum["schema"] = kSchemaVersion;
  sum["chains"] = total;
  sum["violations"] = violations;
  out += dump_json(sum, -1);
  return out;
}

struct OptimizeArgs {
  std::optional<std::size_t> k;
  std::optional<long> budget;
  std::optional<std::uint64_t> seed;
  std::optional<int> restarts;
  std::vector<std::size_t> ks;
  int honeycomb = 0;
};

std::string cmd_optimize(const Io& io, const OptimizeArgs& a) {
  RunConfig cfg;
  if (!io.input.empty()) cfg = run_config_from_json(load(io));
  if (a.k) cfg.k = *a.k;
  if (a.budget) cfg.budget = *a.budget;
  if (a.seed) cfg.seed = *a.seed;
  if (a.restarts) cfg.restarts = *a.restarts;
  if (!a.ks.empty()) cfg.ks = a.ks;
  OptimizeOptions opt;
  opt.restarts = cfg.restarts;

  const OptimizationTrace tr = a.honeycomb > 0 ? optimize_honeycomb(a.honeycomb, cfg.budget, cfg.seed)
                                               : optimize(cfg.k, cfg.container, cfg.budget, cfg.seed, opt);
  std::string out;
  for (const auto& [eval, best] : tr.history) {
    Json ev;
    ev["kind"] = "trace_event";
    ev["k"] = tr.k;
    ev["evaluation"] = eval;
    ev["best_objective"] = best;
    out += dump_json(ev, -1);
  }
  out += dump_json(artifact("optimization_trace", to_json(tr)), -1);
  if (!cfg.ks.empty() && a.honeycomb == 0) {
    Json table;
    table["rows"] = to_json(asymptotic_report(cfg.ks, cfg.container, cfg.budget, cfg.seed, opt));
    out += dump_json(artifact("asymptotic_table", table), -1);
  }
  return out;
}

std::string cmd_render(const Io& io) { return render_svg(load(io)); }

void add_io(CLI::App* sub, Io& io, bool reads = true) {
  if (reads) {
    sub->add_option("-i,--input,input", io.input, "Input JSON file, - for stdin");
  }
  sub->add_option("-o,--output", io.output, "Output file, stdout if omitted");
}

int apply_threads(int flag) {
  int n = flag;
  if (n <= 0) {
    if (const char* env = std::getenv("CHEEGERLAB_THREADS")) {
      try {
        n = std::stoi(env);
      } catch (const std::exception&) {
        throw ValidationError(std::string("CHEEGERLAB_THREADS is not an integer: ") + env);
      }
    }
  }
  if (n > 0) set_thread_count(static_cast<unsigned>(n));
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cheeger constants, honeycomb certificates and partition bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (fallback CHEEGERLAB_THREADS)");

  Io io;
  Tolerances tol;
  ChainArgs chain;
  OptimizeArgs opt;
  int l = 0;
  std::string cells;

  auto add_structure_tol = [&](CLI::App* s) {
    s->add_option("--curvature-tol", tol.structure.curvature_tol, "Relative curvature tolerance");
    s->add_option("--tangent-tol", tol.structure.tangent_tol, "Tangency tolerance in radians");
    s->add_option("--self-ratio-tol", tol.structure.self_ratio_tol, "Relative per/area tolerance");
    s->add_option("--tol", tol.tol, "Cheeger root tolerance for polygon input");
  };

  auto* cheeger = app.add_subcommand("cheeger", "Polygon to Cheeger result");
  add_io(cheeger, io);
  cheeger->add_option("--tol", tol.tol, "Root tolerance");

  auto* structure = app.add_subcommand("structure", "Domain to structure report");
  add_io(structure, io);
  add_structure_tol(structure);

  auto* hales = app.add_subcommand("hales", "Domain or curve to deficit report");
  add_io(hales, io);
  add_structure_tol(hales);
  hales->add_option("--clamp", tol.clamp, "Clamp mode: scaled or literal");

  auto* certificate = app.add_subcommand("certificate", "Cluster to lower-bound certificate");
  add_io(certificate, io);
  certificate->add_option("--clamp", tol.clamp, "Clamp mode: scaled or literal");

  auto* honeycomb = app.add_subcommand("honeycomb", "Honeycomb cluster");
  add_io(honeycomb, io, false);
  auto* l_opt = honeycomb->add_option("--l", l, "Side of the k-triangle")->check(CLI::PositiveNumber);
  auto* cells_opt = honeycomb->add_option("--cells", cells, "Axial cells q,r;q,r;...");
  l_opt->excludes(cells_opt);

  auto* chain_cmd = app.add_subcommand("chain", "Chain bound for one chain or a random sweep");
  add_io(chain_cmd, io);
  chain_cmd->add_flag("--sweep", chain.sweep, "Run a random sweep");
  chain_cmd->add_option("--flavor", chain.flavor, "closed, half_plane, sector or all");
  chain_cmd->add_option("--m", chain.ms, "Chain lengths")->delimiter(',');
  chain_cmd->add_option("--count", chain.count, "Chains per flavor and length");
  chain_cmd->add_option("--seed", chain.seed, "Base seed");
  chain_cmd->add_option("--samples", chain.samples, "Monte Carlo samples");
  chain_cmd->add_flag("--monte-carlo", chain.monte_carlo, "Force Monte Carlo area");
  chain_cmd->add_option("--tol", tol.chain_tol, "Tangency tolerance");

  auto* optimize_cmd = app.add_subcommand("optimize", "Power-diagram partition search");
  add_io(optimize_cmd, io);
  optimize_cmd->add_option("--k", opt.k, "Cell count")->check(CLI::PositiveNumber);
  optimize_cmd->add_option("--budget", opt.budget, "Objective evaluations")->check(CLI::PositiveNumber);
  optimize_cmd->add_option("--seed", opt.seed, "Random seed");
  optimize_cmd->add_option("--restarts", opt.restarts, "Random restarts")->check(CLI::NonNegativeNumber);
  optimize_cmd->add_option("--ks", opt.ks, "Asymptotic table cell counts")->delimiter(',');
  optimize_cmd->add_option("--honeycomb", opt.honeycomb, "k-triangle side, honeycomb incumbent");

  auto* render = app.add_subcommand("render", "Geometry JSON to SVG");
  add_io(render, io);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    apply_threads(threads);
    std::string out;
    if (cheeger->parsed()) {
      out = cmd_cheeger(io, tol);
    } else if (structure->parsed()) {
      out = cmd_structure(io, tol);
    } else if (hales->parsed()) {
      out = cmd_hales(io, tol);
    } else if (certificate->parsed()) {
      out = cmd_certificate(io, tol);
    } else if (honeycomb->parsed()) {
      Cluster cl;
      if (!cells.empty()) {
        cl = honeycomb_cell_cluster(parse_cells(cells));
      } else if (l > 0) {
        cl = honeycomb_cluster(l);
      } else {
        throw ValidationError("honeycomb needs --l or --cells");
      }
      out = dump_json(artifact("cluster", to_json(cl)));
    } else if (chain_cmd->parsed()) {
      out = cmd_chain(io, tol, chain);
    } else if (optimize_cmd->parsed()) {
      out = cmd_optimize(io, opt);
    } else if (render->parsed()) {
      out = cmd_render(io);
    }
    write_output(io, out);
    return 0;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
