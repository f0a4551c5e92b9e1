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


#include "cheegerlab/svg.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <span>
#include <sstream>

namespace cheegerlab {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", std::fabs(v) < 1e-300 ? 0.0 : v);
  return buf;
}

const char* role_color(std::optional<EdgeRole> role) {
  if (!role) return "#222222";
  switch (*role) {
    case EdgeRole::free_arc: return "#d62728";
    case EdgeRole::inner_junction: return "#1f77b4";
    case EdgeRole::border_junction: return "#2ca02c";
  }
  return "#222222";
}

std::string arc_command(const Arc& a, double sweep, Point to) {
  std::string s = "A " + num(a.radius) + " " + num(a.radius) + " 0 ";
  s += std::fabs(sweep) > kPi ? "1 " : "0 ";
  s += sweep > 0 ? "1 " : "0 ";
  return s + num(to.x) + " " + num(to.y);
}

std::string edge_path(const Edge& e) {
  const Point p = e.start();
  std::string d = "M " + num(p.x) + " " + num(p.y) + " ";
  if (e.is_segment()) {
    const Point q = e.end();
    return d + "L " + num(q.x) + " " + num(q.y);
  }
  const Arc& a = e.as_arc();
  const double sweep = a.signed_sweep();
  if (std::fabs(sweep) >= kTwoPi - 1e-12) {
    // A full circle needs two half arcs.
    const Point mid = a.point_at_angle(a.start_angle + 0.5 * sweep);
    return d + arc_command(a, 0.5 * sweep, mid) + " " +
           arc_command(a, 0.5 * sweep, e.end()) + " Z";
  }
  return d + arc_command(a, sweep, e.end());
}

class Canvas {
 public:
  void include(const BoundingBox& b) {
    box_.expand(b.lo);
    box_.expand(b.hi);
  }
  void add(const std::string& s) { body_ << s << '\n'; }

  void curve(const ArcCurve& c, std::span<const EdgeRole> roles, const std::string& cls) {
    add("  <g class=\"" + cls + "\">");
    for (std::size_t i = 0; i < c.size(); ++i) {
      std::optional<EdgeRole> role;
      if (i < roles.size()) role = roles[i];
      std::string extra = role ? std::string(" data-role=\"") + role_name(*role) + "\"" : "";
      add("    <path d=\"" + edge_path(c[i]) + "\" stroke=\"" + role_color(role) + "\"" + extra + "/>");
    }
    add("  </g>");
  }

  std::string finish() const {
    const double w = std::max(box_.width(), 1e-9);
    const double h = std::max(box_.height(), 1e-9);
    const double margin = 0.05 * std::max(w, h);
    const double px = 800.0;
    const double s = px / (std::max(w, h) + 2 * margin);
    const double width = (w + 2 * margin) * s;
    const double height = (h + 2 * margin) * s;
    const double tx = (margin - box_.lo.x) * s;
    const double ty = (margin + box_.hi.y) * s;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
       << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height)
       << "\">\n"
       << "<g transform=\"matrix(" << num(s) << " 0 0 " << num(-s) << " " << num(tx) << " " << num(ty)
       << ")\" fill=\"none\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\">\n"
       << body_.str() << "</g>\n</svg>\n";
    return os.str();
  }

 private:
  BoundingBox box_;
  std::ostringstream body_;
};

}  // namespace

std::string render_svg(const ArcCurve& c) {
  Canvas cv;
  cv.include(bounding_box(c));
  cv.curve(c, {}, "curve");
  return cv.finish();
}

std::string render_svg(const ArcDomain& d) {
  Canvas cv;
  cv.include(bounding_box(d.boundary));
  cv.curve(d.boundary, d.roles, "domain");
  return cv.finish();
}

std::string render_svg(const Cluster& cl) {
  Canvas cv;
  const ArcCurve outline = cl.container.boundary();
  cv.include(bounding_box(outline));
  for (const ArcDomain& d : cl.cells) cv.include(bounding_box(d.boundary));
  cv.curve(outline, {}, "container");
  for (const ArcDomain& d : cl.cells) cv.curve(d.boundary, d.roles, "cell");
  return cv.finish();
}

std::string render_svg(const DiskChain& ch) {
  Canvas cv;
  BoundingBox box;
  for (std::size_t i = 0; i < ch.size(); ++i) {
    box.expand(ch.centers[i] - Point{ch.radii[i], ch.radii[i]});
    box.expand(ch.centers[i] + Point{ch.radii[i], ch.radii[i]});
  }
  const std::vector<Point> poly = chain_polygon(ch);
  for (Point p : poly) box.expand(p);
  cv.include(box);
  std::string d;
  for (std::size_t i = 0; i < poly.size(); ++i)
    d += (i == 0 ? "M " : " L ") + num(poly[i].x) + " " + num(poly[i].y);
  cv.add("  <path class=\"region\" d=\"" + d + " Z\" fill=\"#bbbbbb\" stroke=\"none\"/>");
  for (std::size_t i = 0; i < ch.lines.size(); ++i) {
    const Line& l = ch.lines[i];
    const Point u = unit(l.direction) * box.diagonal();
    const Point a = l.point - u, b = l.point + u;
    cv.add("  <line class=\"boundary-line\" x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" +
           num(b.x) + "\" y2=\"" + num(b.y) + "\" stroke=\"#2ca02c\"/>");
  }
  for (std::size_t i = 0; i < ch.size(); ++i) {
    cv.add("  <circle cx=\"" + num(ch.centers[i].x) + "\" cy=\"" + num(ch.centers[i].y) + "\" r=\"" +
           num(ch.radii[i]) + "\" fill=\"#ffffff\" stroke=\"#1f77b4\"/>");
  }
  return cv.finish();
}

std::string render_svg(const Json& j) {
  const std::string kind = artifact_kind(j);
  if (kind == "polygon") return render_svg(polygon_from_json(j).boundary());
  if (kind == "arc_curve") return render_svg(curve_from_json(j));
  if (kind == "arc_domain" || kind == "cheeger_result") return render_svg(domain_from_json(j));
  if (kind == "cluster") return render_svg(cluster_from_json(j));
  if (kind == "disk_chain") return render_svg(chain_from_json(j));
  throw JsonError("cannot render artifact kind \"" + kind + "\"");
}

}  // namespace cheegerlab
