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

#include "cops/ilp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cops/index.hpp"

namespace cops::exact {
namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void append_term(std::string& line, bool first, double coef, const std::string& name) {
  if (coef == 0.0) {
    if (first) line += "0 " + name;
    return;
  }
  const double mag = std::abs(coef);
  if (first) {
    line += (coef < 0 ? "- " : "");
  } else {
    line += (coef < 0 ? " - " : " + ");
  }
  if (mag != 1.0) line += fmt(mag) + " ";
  line += name;
}

}  // namespace

int edge_count(int n) { return n * (n - 1) / 2; }

int edge_index(int n, int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("bad edge");
  if (u > v) std::swap(u, v);
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

std::pair<int, int> edge_vertices(int n, int index) {
  for (int u = 0; u < n - 1; ++u) {
    const int row = n - 1 - u;
    if (index < row) return {u, u + 1 + index};
    index -= row;
  }
  throw std::invalid_argument("bad edge index");
}

IlpModel build_ilp(const Instance& in, const SubtourMode& mode) {
  require_valid(in);
  const InstanceIndex idx(in);
  const int n = in.num_vertices;
  const int k = static_cast<int>(in.subgroups.size());
  const int l = static_cast<int>(in.clusters.size());
  const int ne = edge_count(n);

  IlpModel model;
  model.num_vertices = n;
  model.x_offset = 0;
  model.y_offset = ne;
  model.z_offset = ne + n;
  model.w_offset = ne + n + k;
  model.vars.reserve(ne + n + k + l);

  for (int e = 0; e < ne; ++e) {
    const auto [u, v] = edge_vertices(n, e);
    model.vars.push_back({VarKind::kEdgeX, u, v,
                          "x_e" + std::to_string(u) + "_" + std::to_string(v)});
  }
  for (int j = 0; j < n; ++j)
    model.vars.push_back({VarKind::kVertexY, j, 0, "y" + std::to_string(j)});
  for (int i = 0; i < k; ++i)
    model.vars.push_back({VarKind::kSubgroupZ, i, 0, "z" + std::to_string(i)});
  for (int g = 0; g < l; ++g)
    model.vars.push_back({VarKind::kClusterW, g, 0, "w" + std::to_string(g)});

  for (int i = 0; i < k; ++i)
    model.objective.push_back({in.subgroups[i].reward, model.z_offset + i});

  auto add_row = [&model](std::string name, std::vector<LinearTerm> terms,
                          RowSense sense, double rhs) {
    model.rows.push_back({std::move(name), std::move(terms), sense, rhs});
  };

  // The start vertex is always visited.
  add_row("start_vertex", {{1.0, model.y_offset + idx.start_vertex}},
          RowSense::kEqual, 1.0);

  // Every visited client vertex has exactly two incident route edges.
  for (int j = 0; j < n; ++j) {
    if (!idx.vertex_is_client[j]) continue;
    std::vector<LinearTerm> terms;
    for (int u = 0; u < n; ++u)
      if (u != j) terms.push_back({1.0, model.x_offset + edge_index(n, u, j)});
    terms.push_back({-2.0, model.y_offset + j});
    add_row("degree_v" + std::to_string(j), std::move(terms), RowSense::kEqual,
            0.0);
  }

  // At most two route edges leave the start cluster.
  {
    std::vector<LinearTerm> terms;
    for (int u = 0; u < n; ++u)
      if (u != idx.start_vertex)
        terms.push_back({1.0, model.x_offset + edge_index(n, u, idx.start_vertex)});
    add_row("start_cluster_degree", std::move(terms), RowSense::kLessEqual, 2.0);
  }

  // Total traversal cost within budget.
  {
    std::vector<LinearTerm> terms;
    for (int e = 0; e < ne; ++e) {
      const auto [u, v] = edge_vertices(n, e);
      terms.push_back({edge_cost(in, u, v), model.x_offset + e});
    }
    add_row("budget", std::move(terms), RowSense::kLessEqual, in.budget);
  }

  // Subtour rows: every client subset U of size <= k gets
  // sum_{e in delta(U)} x_e - (1/|U|) sum_{j in U} y_j >= 0.
  if (mode.kind == SubtourMode::kAllUpTo) {
    std::vector<int> clients;
    for (int j = 0; j < n; ++j)
      if (idx.vertex_is_client[j]) clients.push_back(j);
    const int cap = std::min<int>(mode.k, static_cast<int>(clients.size()));
    std::vector<int> subset;
    auto emit = [&]() {
      std::vector<bool> inside(n, false);
      for (int j : subset) inside[j] = true;
      std::vector<LinearTerm> terms;
      for (int j : subset)
        for (int u = 0; u < n; ++u)
          if (!inside[u]) terms.push_back({1.0, model.x_offset + edge_index(n, u, j)});
      const double frac = -1.0 / static_cast<double>(subset.size());
      for (int j : subset) terms.push_back({frac, model.y_offset + j});
      std::string name = "subtour";
      for (int j : subset) name += "_v" + std::to_string(j);
      add_row(std::move(name), std::move(terms), RowSense::kGreaterEqual, 0.0);
    };
    auto recurse = [&](auto&& self, std::size_t from) -> void {
      if (!subset.empty()) emit();
      if (static_cast<int>(subset.size()) == cap) return;
      for (std::size_t i = from; i < clients.size(); ++i) {
        subset.push_back(clients[i]);
        self(self, i + 1);
        subset.pop_back();
      }
    };
    recurse(recurse, 0);
  }

  // A served subgroup needs every one of its vertices visited.
  for (int i = 0; i < k; ++i)
    for (int j : in.subgroups[i].vertex_ids)
      add_row("link_z" + std::to_string(i) + "_y" + std::to_string(j),
              {{1.0, model.z_offset + i}, {-1.0, model.y_offset + j}},
              RowSense::kLessEqual, 0.0);

  // Per cluster, the served-subgroup count equals the cluster indicator.
  for (int g = 0; g < l; ++g) {
    std::vector<LinearTerm> terms;
    for (int s : in.clusters[g].subgroup_ids)
      terms.push_back({1.0, model.z_offset + s});
    terms.push_back({-1.0, model.w_offset + g});
    add_row("cluster_choice_c" + std::to_string(g), std::move(terms),
            RowSense::kEqual, 0.0);
  }

  // No more vertices on the route than the served subgroups account for.
  {
    std::vector<LinearTerm> terms;
    for (int j = 0; j < n; ++j) terms.push_back({1.0, model.y_offset + j});
    for (int i = 0; i < k; ++i)
      terms.push_back({-static_cast<double>(in.subgroups[i].vertex_ids.size()),
                       model.z_offset + i});
    add_row("visit_efficiency", std::move(terms), RowSense::kLessEqual, 0.0);
  }

  if (!in.is_circular()) {
    // Exactly one end-cluster vertex is served, with exactly one route edge.
    std::vector<LinearTerm> yterms;
    std::vector<bool> is_end(n, false);
    for (int v : idx.end_vertices) is_end[v] = true;
    for (int v : idx.end_vertices)
      yterms.push_back({1.0, model.y_offset + v});
    add_row("end_cluster_visit", std::move(yterms), RowSense::kEqual, 1.0);

    std::vector<LinearTerm> xterms;
    for (int v : idx.end_vertices)
      for (int u = 0; u < n; ++u)
        if (!is_end[u]) xterms.push_back({1.0, model.x_offset + edge_index(n, u, v)});
    add_row("end_cluster_degree", std::move(xterms), RowSense::kEqual, 1.0);
  }

  return model;
}

std::string lp_row(const IlpModel& model, const LinearConstraint& row) {
  std::string line = " " + row.name + ": ";
  bool first = true;
  for (const LinearTerm& t : row.terms) {
    append_term(line, first, t.coef, model.vars[t.var].name);
    first = false;
  }
  if (first) line += "0 " + model.vars.front().name;
  switch (row.sense) {
    case RowSense::kLessEqual: line += " <= "; break;
    case RowSense::kGreaterEqual: line += " >= "; break;
    case RowSense::kEqual: line += " = "; break;
  }
  line += fmt(row.rhs);
  return line;
}

std::string export_lp(const IlpModel& model) {
  std::ostringstream os;
  os << "\\ COPS integer model\n";
  os << "Maximize\n obj: ";
  bool first = true;
  std::string obj;
  for (const LinearTerm& t : model.objective) {
    append_term(obj, first, t.coef, model.vars[t.var].name);
    first = false;
  }
  if (first) obj = "0 " + model.vars.front().name;
  os << obj << "\n";
  os << "Subject To\n";
  for (const LinearConstraint& row : model.rows) os << lp_row(model, row) << "\n";
  os << "Binary\n";
  for (const IlpVar& var : model.vars) os << " " << var.name << "\n";
  os << "End\n";
  return os.str();
}

std::vector<std::string> violated_rows(const IlpModel& model,
                                       std::span<const double> values,
                                       double tol) {
  if (values.size() != model.vars.size())
    throw std::invalid_argument("assignment size mismatch");
  std::vector<std::string> bad;
  for (const LinearConstraint& row : model.rows) {
    double lhs = 0.0;
    for (const LinearTerm& t : row.terms) lhs += t.coef * values[t.var];
    bool ok = true;
    switch (row.sense) {
      case RowSense::kLessEqual: ok = lhs <= row.rhs + tol; break;
      case RowSense::kGreaterEqual: ok = lhs >= row.rhs - tol; break;
      case RowSense::kEqual: ok = std::abs(lhs - row.rhs) <= tol; break;
    }
    if (!ok) bad.push_back(row.name);
  }
  return bad;
}

std::vector<double> induced_assignment(const Instance& in, const IlpModel& model,
                                       const Solution& sol) {
  const int n = in.num_vertices;
  std::vector<double> values(model.vars.size(), 0.0);

  const auto& route = sol.route;
  for (std::size_t i = 0; i + 1 < route.size(); ++i)
    values[model.x_offset + edge_index(n, route[i], route[i + 1])] += 1.0;
  if (in.is_circular() && route.size() > 1)
    values[model.x_offset + edge_index(n, route.back(), route.front())] += 1.0;

  for (int v : route) values[model.y_offset + v] = 1.0;
  for (int s : sol.selected_subgroups) values[model.z_offset + s] = 1.0;
  for (const Cluster& cl : in.clusters) {
    double w = 0.0;
    for (int s : cl.subgroup_ids) w += values[model.z_offset + s];
    values[model.w_offset + cl.id] = w;
  }
  return values;
}

std::vector<LinearConstraint> separate_subtours(const Instance& in,
                                                std::span<const double> x_values,
                                                std::span<const double> y_values) {
  const int n = in.num_vertices;
  const int ne = edge_count(n);
  if (static_cast<int>(x_values.size()) != ne ||
      static_cast<int>(y_values.size()) != n)
    throw std::invalid_argument("assignment size mismatch");
  for (double v : x_values)
    if (std::abs(v - std::round(v)) > 1e-6)
      throw std::invalid_argument("edge assignment is not integral");
  for (double v : y_values)
    if (std::abs(v - std::round(v)) > 1e-6)
      throw std::invalid_argument("vertex assignment is not integral");

  const InstanceIndex idx(in);

  // Union-find over the support graph.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int e = 0; e < ne; ++e) {
    if (std::round(x_values[e]) < 1.0) continue;
    const auto [u, v] = edge_vertices(n, e);
    parent[find(u)] = find(v);
  }

  // Group the visited vertices by component; components without the start
  // vertex are disconnected subtours.
  const int start_root = find(idx.start_vertex);
  std::vector<std::vector<int>> strays(n);
  for (int v = 0; v < n; ++v) {
    if (std::round(y_values[v]) < 1.0) continue;
    const int root = find(v);
    if (root != start_root && idx.vertex_is_client[v]) strays[root].push_back(v);
  }

  // Rows are expressed in the standard variable layout (x block, then y).
  const int x_offset = 0;
  const int y_offset = ne;
  std::vector<LinearConstraint> cuts;
  for (const std::vector<int>& u_set : strays) {
    if (u_set.empty()) continue;
    std::vector<bool> inside(n, false);
    for (int v : u_set) inside[v] = true;
    LinearConstraint row;
    row.sense = RowSense::kGreaterEqual;
    row.rhs = 0.0;
    row.name = "subtour_cut_" + std::to_string(cuts.size());
    for (int j : u_set)
      for (int u = 0; u < n; ++u)
        if (!inside[u]) row.terms.push_back({1.0, x_offset + edge_index(n, u, j)});
    const double frac = -1.0 / static_cast<double>(u_set.size());
    for (int j : u_set) row.terms.push_back({frac, y_offset + j});
    cuts.push_back(std::move(row));
  }
  return cuts;
}

}  // namespace cops::exact
