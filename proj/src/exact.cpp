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

#include "cops/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "cops/held_karp.hpp"
#include "cops/index.hpp"

namespace cops::exact {
namespace {

constexpr double kTol = 1e-9;

struct Candidate {
  double reward = -1.0;
  double cost = std::numeric_limits<double>::infinity();
  std::vector<int> selected;  // sorted
  std::uint32_t mask = 0;
  int last = -1;  // compact endpoint for reconstruction
};

// (max reward, min cost, lexicographically smallest selected set).
bool better(const Candidate& a, const Candidate& b) {
  if (a.reward > b.reward + kTol) return true;
  if (a.reward < b.reward - kTol) return false;
  if (a.cost < b.cost - kTol) return true;
  if (a.cost > b.cost + kTol) return false;
  return a.selected < b.selected;
}

}  // namespace

std::optional<Solution> solve_exact(const Instance& in, int vertex_limit) {
  require_valid(in);
  if (vertex_limit <= 0) vertex_limit = kDefaultVertexLimit;
  const InstanceIndex idx(in);
  const bool circular = in.is_circular();

  // Compact vertex universe: the start vertex, every vertex of every subgroup
  // of a client cluster, and the end-cluster vertices.
  std::vector<int> verts{idx.start_vertex};
  {
    std::vector<bool> taken(in.num_vertices, false);
    taken[idx.start_vertex] = true;
    auto add = [&](int v) {
      if (!taken[v]) {
        taken[v] = true;
        verts.push_back(v);
      }
    };
    for (int c : idx.client_clusters)
      for (int s : in.clusters[c].subgroup_ids)
        for (int v : in.subgroups[s].vertex_ids) add(v);
    if (!circular)
      for (int v : idx.end_vertices) add(v);
    std::sort(verts.begin() + 1, verts.end());
  }
  const int m = static_cast<int>(verts.size());
  if (m > vertex_limit)
    throw SizeLimitError("instance needs " + std::to_string(m) +
                         " vertices, above the limit of " +
                         std::to_string(vertex_limit));

  std::vector<int> compact_of(in.num_vertices, -1);
  for (int i = 0; i < m; ++i) compact_of[verts[i]] = i;

  // One shared table prices every assignment in O(1).
  std::vector<double> dist(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      dist[static_cast<std::size_t>(i) * m + j] = edge_cost(in, verts[i], verts[j]);
  const HeldKarp hk(std::move(dist), m);

  std::uint32_t end_mask = 0;
  if (!circular)
    for (int v : idx.end_vertices) end_mask |= 1u << compact_of[v];

  std::vector<std::uint32_t> subgroup_mask(in.subgroups.size(), 0);
  for (const Subgroup& sg : in.subgroups) {
    std::uint32_t mask = 0;
    for (int v : sg.vertex_ids) {
      if (compact_of[v] < 0) { mask = 0; break; }  // unreachable subgroup
      mask |= 1u << compact_of[v];
    }
    subgroup_mask[sg.id] = mask;
  }

  // Reward of the cheapest-to-claim end subgroup per end vertex (several end
  // subgroups may sit on one vertex; the best one claims the visit).
  std::vector<std::pair<int, double>> end_choice;  // (end subgroup, reward)
  if (!circular) {
    for (int v : idx.end_vertices) {
      int best_sg = -1;
      for (int s : idx.end_subgroups) {
        if (in.subgroups[s].vertex_ids.front() != v) continue;
        if (best_sg < 0 ||
            in.subgroups[s].reward > in.subgroups[best_sg].reward + kTol)
          best_sg = s;
      }
      end_choice.push_back({best_sg, in.subgroups[best_sg].reward});
    }
  }

  const double start_reward = in.subgroups[idx.start_subgroup].reward;
  Candidate best;

  // Evaluates one choice of client subgroups.
  auto consider = [&](const std::vector<int>& chosen, std::uint32_t mask,
                      double reward) {
    if (circular) {
      const double cost = hk.tour_cost(mask | 1u);
      if (cost > in.budget + kFeasibilityTol) return;
      Candidate cand;
      cand.reward = reward + start_reward;
      cand.cost = cost;
      cand.mask = mask | 1u;
      cand.selected = chosen;
      cand.selected.push_back(idx.start_subgroup);
      std::sort(cand.selected.begin(), cand.selected.end());
      // Recover the endpoint of the optimal tour for reconstruction.
      if (cand.mask == 1u) {
        cand.last = 0;
      } else {
        double b = std::numeric_limits<double>::infinity();
        for (int last = 1; last < m; ++last) {
          if (!(cand.mask & (1u << last))) continue;
          const double c = hk.path_cost(cand.mask, last) +
                           edge_cost(in, verts[last], verts[0]);
          if (c < b - kTol) {
            b = c;
            cand.last = last;
          }
        }
      }
      if (better(cand, best)) best = cand;
      return;
    }

    for (std::size_t e = 0; e < idx.end_vertices.size(); ++e) {
      const int end_vertex = idx.end_vertices[e];
      const std::uint32_t end_bit = 1u << compact_of[end_vertex];
      const std::uint32_t full = mask | 1u | end_bit;
      // Exactly one end-cluster vertex may be visited.
      if ((full & end_mask) != end_bit) continue;
      const double cost = hk.path_cost(full, compact_of[end_vertex]);
      if (cost > in.budget + kFeasibilityTol) continue;
      Candidate cand;
      cand.reward = reward + start_reward + end_choice[e].second;
      cand.cost = cost;
      cand.mask = full;
      cand.last = compact_of[end_vertex];
      cand.selected = chosen;
      cand.selected.push_back(idx.start_subgroup);
      cand.selected.push_back(end_choice[e].first);
      std::sort(cand.selected.begin(), cand.selected.end());
      if (better(cand, best)) best = cand;
    }
  };

  // Depth-first enumeration over client clusters: skip it or pick one of its
  // subgroups whose clusters are all still unserved.
  const std::vector<int>& clusters = idx.client_clusters;
  std::vector<bool> served(in.clusters.size(), false);
  std::vector<int> chosen;

  auto enumerate = [&](auto&& self, std::size_t pos, std::uint32_t mask,
                       double reward) -> void {
    if (pos == clusters.size()) {
      consider(chosen, mask, reward);
      return;
    }
    const int cluster = clusters[pos];
    self(self, pos + 1, mask, reward);  // leave the cluster unserved
    if (served[cluster]) return;
    for (int s : in.clusters[cluster].subgroup_ids) {
      bool free = true;
      for (int c : idx.clusters_of_subgroup[s]) free = free && !served[c];
      if (!free) continue;
      for (int c : idx.clusters_of_subgroup[s]) served[c] = true;
      chosen.push_back(s);
      self(self, pos + 1, mask | subgroup_mask[s], reward + in.subgroups[s].reward);
      chosen.pop_back();
      for (int c : idx.clusters_of_subgroup[s]) served[c] = false;
    }
  };
  enumerate(enumerate, 0, 0u, 0.0);

  if (best.reward < 0.0) return std::nullopt;  // nothing reaches the end

  Solution sol;
  sol.selected_subgroups = best.selected;
  const std::vector<int> compact_route = hk.reconstruct_path(best.mask, best.last);
  for (int c : compact_route) sol.route.push_back(verts[c]);
  sol.cost = route_cost(in, sol.route, circular);
  sol.reward = 0.0;
  for (int s : sol.selected_subgroups) sol.reward += in.subgroups[s].reward;
  return sol;
}

}  // namespace cops::exact
