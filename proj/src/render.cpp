// Copyright 2026 The COPS Solver Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cops/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cops/index.hpp"

namespace cops {
namespace {

const char* const kPalette[] = {
    "#4269d0", "#efb118", "#ff725c", "#6cc5b0", "#3ca951", "#ff8ab7",
    "#a463f2", "#97bbf5", "#9c6b4e", "#9498a0", "#e4cf5b", "#66bb6a",
};
constexpr int kPaletteSize = 12;

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Andrew monotone chain; returns hull points in counter-clockwise order.
std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int n = static_cast<int>(pts.size());
  if (n < 3) return pts;
  auto cross = [](const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<Point> hull(2 * n);
  int h = 0;
  for (int i = 0; i < n; ++i) {
    while (h >= 2 && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
    hull[h++] = pts[i];
  }
  for (int i = n - 2, base = h + 1; i >= 0; --i) {
    while (h >= base && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
    hull[h++] = pts[i];
  }
  hull.resize(h - 1);
  return hull;
}

}  // namespace

std::string render_route_svg(const Instance& in, const Solution& sol) {
  if (in.metric != Metric::kEuclidean)
    throw std::invalid_argument(
        "cannot draw an explicit-matrix instance: no coordinates");
  for (int v : sol.route)
    if (v < 0 || v >= in.num_vertices)
      throw std::invalid_argument("route references unknown vertex " +
                                  std::to_string(v));

  const InstanceIndex idx(in);

  double min_x = in.coords[0].x, max_x = in.coords[0].x;
  double min_y = in.coords[0].y, max_y = in.coords[0].y;
  for (const Point& p : in.coords) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1.0});
  const double scale = 600.0 / span;
  const double margin = 30.0;
  const double width = (max_x - min_x) * scale + 2 * margin;
  const double height = (max_y - min_y) * scale + 2 * margin;
  // Flip y: world coordinates grow upwards, SVG grows downwards.
  auto sx = [&](double x) { return (x - min_x) * scale + margin; };
  auto sy = [&](double y) { return (max_y - y) * scale + margin; };

  // Color a vertex by the lowest cluster that can serve it.
  std::vector<int> cluster_of_vertex(in.num_vertices, 0);
  for (int v = 0; v < in.num_vertices; ++v) {
    int best = static_cast<int>(in.clusters.size());
    for (int s : idx.subgroups_of_vertex[v])
      for (int c : idx.clusters_of_subgroup[s]) best = std::min(best, c);
    cluster_of_vertex[v] = best % kPaletteSize;
  }

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num(width)
     << " " << num(height) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  // Shaded hull (or segment) per selected subgroup.
  for (int s : sol.selected_subgroups) {
    if (s < 0 || s >= static_cast<int>(in.subgroups.size())) continue;
    const Subgroup& sg = in.subgroups[s];
    if (sg.vertex_ids.size() < 2) continue;
    std::vector<Point> pts;
    for (int v : sg.vertex_ids) pts.push_back(in.coords[v]);
    const auto hull = convex_hull(std::move(pts));
    const char* color = kPalette[cluster_of_vertex[sg.vertex_ids.front()]];
    if (hull.size() >= 3) {
      os << "<polygon points=\"";
      for (std::size_t i = 0; i < hull.size(); ++i) {
        if (i) os << " ";
        os << num(sx(hull[i].x)) << "," << num(sy(hull[i].y));
      }
      os << "\" fill=\"" << color << "\" fill-opacity=\"0.15\" stroke=\""
         << color << "\" stroke-dasharray=\"4 3\"/>\n";
    } else if (hull.size() == 2) {
      os << "<line x1=\"" << num(sx(hull[0].x)) << "\" y1=\"" << num(sy(hull[0].y))
         << "\" x2=\"" << num(sx(hull[1].x)) << "\" y2=\"" << num(sy(hull[1].y))
         << "\" stroke=\"" << color << "\" stroke-dasharray=\"4 3\"/>\n";
    }
  }

  // The route, closed for circular instances.
  if (!sol.route.empty()) {
    os << "<polyline points=\"";
    for (std::size_t i = 0; i < sol.route.size(); ++i) {
      if (i) os << " ";
      const Point& p = in.coords[sol.route[i]];
      os << num(sx(p.x)) << "," << num(sy(p.y));
    }
    if (in.is_circular() && sol.route.size() > 1) {
      const Point& p = in.coords[sol.route.front()];
      os << " " << num(sx(p.x)) << "," << num(sy(p.y));
    }
    os << "\" fill=\"none\" stroke=\"#1f5fd0\" stroke-width=\"2\"/>\n";
  }

  for (int v = 0; v < in.num_vertices; ++v) {
    const Point& p = in.coords[v];
    const bool is_start = v == idx.start_vertex;
    os << "<circle cx=\"" << num(sx(p.x)) << "\" cy=\"" << num(sy(p.y))
       << "\" r=\"" << (is_start ? "7" : "5") << "\" fill=\""
       << kPalette[cluster_of_vertex[v]] << "\" stroke=\""
       << (is_start ? "#000000" : "#444444") << "\"/>\n";
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace cops
