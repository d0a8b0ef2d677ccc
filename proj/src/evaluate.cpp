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

#include "cops/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cops/index.hpp"

namespace cops {
namespace {

void check_vertex(const Instance& in, int v) {
  if (v < 0 || v >= in.num_vertices)
    throw std::invalid_argument("unknown vertex id " + std::to_string(v));
}

}  // namespace

const char* violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kUnknownVertex: return "unknown-vertex";
    case ViolationKind::kUnknownSubgroup: return "unknown-subgroup";
    case ViolationKind::kStartVertex: return "start-vertex";
    case ViolationKind::kEndCluster: return "end-cluster";
    case ViolationKind::kSubgroupCoverage: return "subgroup-coverage";
    case ViolationKind::kClusterConflict: return "cluster-conflict";
    case ViolationKind::kBudget: return "budget";
    case ViolationKind::kCostMismatch: return "cost-mismatch";
    case ViolationKind::kRewardMismatch: return "reward-mismatch";
  }
  return "?";
}

double edge_cost(const Instance& in, int u, int v) {
  check_vertex(in, u);
  check_vertex(in, v);
  if (in.metric == Metric::kExplicitMatrix)
    return in.matrix[static_cast<std::size_t>(u) * in.num_vertices + v];
  const double dx = in.coords[u].x - in.coords[v].x;
  const double dy = in.coords[u].y - in.coords[v].y;
  const double d = std::sqrt(dx * dx + dy * dy);
  return in.round_costs ? std::round(d) : d;
}

double route_cost(const Instance& in, std::span<const int> route,
                  bool circular) {
  if (route.empty()) throw std::invalid_argument("route is empty");
  double cost = 0.0;
  for (std::size_t i = 0; i + 1 < route.size(); ++i)
    cost += edge_cost(in, route[i], route[i + 1]);
  if (circular && route.size() > 1)
    cost += edge_cost(in, route.back(), route.front());
  return cost;
}

Solution evaluate(const Instance& in, std::vector<int> route,
                  std::vector<int> selected) {
  for (int v : route) check_vertex(in, v);
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  for (int s : selected)
    if (s < 0 || s >= static_cast<int>(in.subgroups.size()))
      throw std::invalid_argument("unknown subgroup id " + std::to_string(s));

  Solution sol;
  sol.cost = route.empty() ? 0.0
                           : route_cost(in, route, in.is_circular());
  for (int s : selected) sol.reward += in.subgroups[s].reward;
  sol.route = std::move(route);
  sol.selected_subgroups = std::move(selected);
  return sol;
}

std::vector<Violation> validate(const Instance& in, const Solution& sol) {
  std::vector<Violation> out;
  auto add = [&out](ViolationKind kind, int entity, std::string msg) {
    out.push_back({kind, entity, std::move(msg)});
  };

  bool ids_ok = true;
  for (int v : sol.route) {
    if (v < 0 || v >= in.num_vertices) {
      add(ViolationKind::kUnknownVertex, v,
          "route references unknown vertex " + std::to_string(v));
      ids_ok = false;
    }
  }
  for (int s : sol.selected_subgroups) {
    if (s < 0 || s >= static_cast<int>(in.subgroups.size())) {
      add(ViolationKind::kUnknownSubgroup, s,
          "selection references unknown subgroup " + std::to_string(s));
      ids_ok = false;
    }
  }
  if (!ids_ok) return out;

  const InstanceIndex idx(in);

  if (sol.route.empty() || sol.route.front() != idx.start_vertex) {
    add(ViolationKind::kStartVertex, idx.start_vertex,
        "route must start at vertex " + std::to_string(idx.start_vertex));
  }
  if (!in.is_circular() && !sol.route.empty() &&
      !idx.is_end_vertex(sol.route.back())) {
    add(ViolationKind::kEndCluster, sol.route.back(),
        "route ends at vertex " + std::to_string(sol.route.back()) +
            " which is not in end cluster " +
            std::to_string(in.end_cluster_id));
  }

  std::vector<bool> on_route(in.num_vertices, false);
  for (int v : sol.route) on_route[v] = true;
  for (int s : sol.selected_subgroups) {
    for (int v : in.subgroups[s].vertex_ids) {
      if (!on_route[v]) {
        add(ViolationKind::kSubgroupCoverage, s,
            "selected subgroup " + std::to_string(s) + " misses vertex " +
                std::to_string(v));
        break;
      }
    }
  }

  for (const Cluster& cl : in.clusters) {
    int picked = 0;
    for (int s : cl.subgroup_ids)
      if (std::binary_search(sol.selected_subgroups.begin(),
                             sol.selected_subgroups.end(), s))
        ++picked;
    if (picked > 1)
      add(ViolationKind::kClusterConflict, cl.id,
          "cluster " + std::to_string(cl.id) + " has " +
              std::to_string(picked) + " selected subgroups");
  }

  if (sol.cost > in.budget + kFeasibilityTol) {
    std::ostringstream os;
    os << "cost " << sol.cost << " exceeds budget " << in.budget;
    add(ViolationKind::kBudget, -1, os.str());
  }

  if (!sol.route.empty()) {
    const double actual = route_cost(in, sol.route, in.is_circular());
    if (std::abs(actual - sol.cost) > kFeasibilityTol) {
      std::ostringstream os;
      os << "stored cost " << sol.cost << " differs from route cost " << actual;
      add(ViolationKind::kCostMismatch, -1, os.str());
    }
  }
  double reward = 0.0;
  for (int s : sol.selected_subgroups) reward += in.subgroups[s].reward;
  if (std::abs(reward - sol.reward) > kFeasibilityTol) {
    std::ostringstream os;
    os << "stored reward " << sol.reward << " differs from selection reward "
       << reward;
    add(ViolationKind::kRewardMismatch, -1, os.str());
  }

  return out;
}

double reward_upper_bound(const Instance& in) {
  double bound = 0.0;
  for (const Cluster& cl : in.clusters) {
    double best = 0.0;
    for (int s : cl.subgroup_ids)
      best = std::max(best, in.subgroups[s].reward);
    bound += best;
  }
  return bound;
}

}  // namespace cops
