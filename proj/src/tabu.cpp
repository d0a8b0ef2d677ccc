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

#include "cops/tabu.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cops::tabu {
namespace {

bool contains(const std::vector<int>& sorted, int value) {
  return std::binary_search(sorted.begin(), sorted.end(), value);
}

void insert_sorted(std::vector<int>& sorted, int value) {
  sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), value), value);
}

void erase_sorted(std::vector<int>& sorted, int value) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
  if (it != sorted.end() && *it == value) sorted.erase(it);
}

double recompute_reward(const Instance& in, const std::vector<int>& selected) {
  double reward = 0.0;
  for (int s : selected) reward += in.subgroups[s].reward;
  return reward;
}

bool cluster_conflict(const InstanceIndex& idx, const Solution& sol,
                      int subgroup) {
  for (int cl : idx.clusters_of_subgroup[subgroup])
    for (int other : idx.instance->clusters[cl].subgroup_ids)
      if (other != subgroup && contains(sol.selected_subgroups, other))
        return true;
  return false;
}

// (reward, -cost) lexicographic improvement test.
bool better_solution(const Solution& cand, const Solution& incumbent) {
  if (cand.reward > incumbent.reward + kFeasibilityTol) return true;
  if (cand.reward < incumbent.reward - kFeasibilityTol) return false;
  return cand.cost < incumbent.cost - kFeasibilityTol;
}

}  // namespace

void require_valid(const SearchParams& params) {
  if (params.alpha <= 0 || params.beta <= 0 || params.lambda <= 0)
    throw std::invalid_argument("search parameters must be positive");
  if (params.alpha >= params.beta)
    throw std::invalid_argument("alpha must be smaller than beta");
  if (params.old_removal_threshold < 0 || params.max_iterations < 0)
    throw std::invalid_argument("search parameters must be non-negative");
}

const char* move_kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::kNone: return "none";
    case MoveKind::kNonTabuInsertion: return "non_tabu_insert";
    case MoveKind::kOldRemoval: return "old_remove";
    case MoveKind::kTabuInsertion: return "tabu_insert";
    case MoveKind::kRandomInsertion: return "random_insert";
    case MoveKind::kNonTabuRemoval: return "non_tabu_remove";
    case MoveKind::kRandomRemoval: return "random_remove";
    case MoveKind::kEndpointRotation: return "rotate_end";
  }
  return "?";
}

std::string trace_csv(const std::vector<TraceEntry>& trace) {
  std::ostringstream os;
  os << "iteration,move,reward,cost\n";
  char buf[64];
  for (const TraceEntry& e : trace) {
    std::snprintf(buf, sizeof buf, "%.9g,%.9g", e.reward, e.cost);
    os << e.iteration << "," << move_kind_name(e.move) << "," << buf << "\n";
  }
  return os.str();
}

Solution insert_subgroup(const Instance& in, const InstanceIndex& idx,
                         const Solution& sol, int subgroup) {
  if (subgroup < 0 || subgroup >= static_cast<int>(in.subgroups.size()))
    throw std::invalid_argument("unknown subgroup id " +
                                std::to_string(subgroup));
  if (contains(sol.selected_subgroups, subgroup))
    throw std::invalid_argument("subgroup " + std::to_string(subgroup) +
                                " is already selected");
  if (cluster_conflict(idx, sol, subgroup))
    throw std::invalid_argument("a cluster of subgroup " +
                                std::to_string(subgroup) +
                                " already has a selected subgroup");

  Solution out = sol;
  const bool circular = in.is_circular();
  std::vector<bool> on_route(in.num_vertices, false);
  for (int v : out.route) on_route[v] = true;

  bool inserted_any = false;
  for (int v : in.subgroups[subgroup].vertex_ids) {
    if (on_route[v]) continue;
    // Cheapest insertion position. Paths cannot displace the pinned endpoint,
    // tours may also append after the last vertex.
    const int len = static_cast<int>(out.route.size());
    int best_pos = -1;
    double best_delta = std::numeric_limits<double>::infinity();
    const int max_pos = circular ? len : len - 1;
    for (int pos = 1; pos <= max_pos; ++pos) {
      const int before = out.route[pos - 1];
      const int after = out.route[pos % len];
      double delta = edge_cost(in, before, v) + edge_cost(in, v, after);
      if (len > 1 || circular) delta -= edge_cost(in, before, after);
      if (delta < best_delta - kFeasibilityTol) {
        best_delta = delta;
        best_pos = pos;
      }
    }
    if (best_pos < 0) {  // single-vertex path seed: extend it
      out.route.push_back(v);
    } else {
      out.route.insert(out.route.begin() + best_pos, v);
    }
    on_route[v] = true;
    inserted_any = true;
  }

  if (inserted_any) out.route = two_opt(in, std::move(out.route), circular);
  insert_sorted(out.selected_subgroups, subgroup);
  out.cost = route_cost(in, out.route, circular);
  out.reward = recompute_reward(in, out.selected_subgroups);
  return out;
}

Solution insert_subgroup(const Instance& in, const Solution& sol,
                         int subgroup) {
  return insert_subgroup(in, InstanceIndex(in), sol, subgroup);
}

Solution remove_subgroup(const Instance& in, const InstanceIndex& idx,
                         const Solution& sol, int subgroup) {
  if (subgroup < 0 || subgroup >= static_cast<int>(in.subgroups.size()))
    throw std::invalid_argument("unknown subgroup id " +
                                std::to_string(subgroup));
  if (!contains(sol.selected_subgroups, subgroup))
    throw std::invalid_argument("subgroup " + std::to_string(subgroup) +
                                " is not selected");

  Solution out = sol;
  erase_sorted(out.selected_subgroups, subgroup);

  // A vertex leaves the route only when no other selected subgroup needs it;
  // the start vertex and the path endpoint always stay.
  std::vector<bool> keep(in.num_vertices, false);
  for (int s : out.selected_subgroups)
    for (int v : in.subgroups[s].vertex_ids) keep[v] = true;
  keep[idx.start_vertex] = true;
  if (!in.is_circular() && !out.route.empty()) keep[out.route.back()] = true;

  std::vector<bool> removable(in.num_vertices, false);
  for (int v : in.subgroups[subgroup].vertex_ids) removable[v] = true;

  std::vector<int> route;
  route.reserve(out.route.size());
  for (int v : out.route)
    if (!removable[v] || keep[v]) route.push_back(v);
  out.route = std::move(route);

  out.cost = route_cost(in, out.route, in.is_circular());
  out.reward = recompute_reward(in, out.selected_subgroups);
  return out;
}

Solution remove_subgroup(const Instance& in, const Solution& sol,
                         int subgroup) {
  return remove_subgroup(in, InstanceIndex(in), sol, subgroup);
}

Solution initial_solution(const Instance& in, const InstanceIndex& idx,
                          const SearchParams& params, Rng& rng) {
  const bool circular = in.is_circular();
  Solution sol;
  sol.route.push_back(idx.start_vertex);
  sol.selected_subgroups.push_back(idx.start_subgroup);

  if (!circular) {
    // Seed the path with the closest endpoint; the search may rotate it later.
    int best_v = -1, best_sg = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int s : idx.end_subgroups) {
      const int v = in.subgroups[s].vertex_ids.front();
      const double d = edge_cost(in, idx.start_vertex, v);
      if (d < best_d - kFeasibilityTol) {
        best_d = d;
        best_v = v;
        best_sg = s;
      }
    }
    sol.route.push_back(best_v);
    insert_sorted(sol.selected_subgroups, best_sg);
  }
  sol.cost = route_cost(in, sol.route, circular);
  sol.reward = recompute_reward(in, sol.selected_subgroups);
  if (sol.cost > in.budget + kFeasibilityTol) return sol;  // nothing fits

  std::vector<int> order = idx.client_clusters;
  rng.shuffle(order);

  int consecutive_misses = 0;
  for (int cluster : order) {
    if (consecutive_misses >= params.lambda) break;

    bool served = false;
    for (int s : in.clusters[cluster].subgroup_ids)
      served = served || contains(sol.selected_subgroups, s);
    if (served) continue;

    // Most profitable insertable subgroup: reward per vertex, lowest id wins
    // ties.
    int pick = -1;
    double pick_ratio = -1.0;
    for (int s : in.clusters[cluster].subgroup_ids) {
      if (!idx.subgroup_is_client[s]) continue;
      if (cluster_conflict(idx, sol, s)) continue;
      const double ratio =
          in.subgroups[s].reward / static_cast<double>(in.subgroups[s].vertex_ids.size());
      if (ratio > pick_ratio + kFeasibilityTol) {
        pick_ratio = ratio;
        pick = s;
      }
    }
    if (pick < 0) continue;

    Solution trial = insert_subgroup(in, idx, sol, pick);
    if (trial.cost <= in.budget + kFeasibilityTol) {
      sol = std::move(trial);
      consecutive_misses = 0;
    } else {
      ++consecutive_misses;
    }
  }
  return sol;
}

Solution initial_solution(const Instance& in, const SearchParams& params) {
  require_valid(params);
  Rng rng(params.seed);
  return initial_solution(in, InstanceIndex(in), params, rng);
}

NeighborResult next_neighbor(const Instance& in, const InstanceIndex& idx,
                             TabuState& state, const SearchParams& params,
                             Rng& rng) {
  const Solution& cur = state.current;
  const double budget = in.budget + kFeasibilityTol;

  auto clusters_unserved = [&](int s) { return !cluster_conflict(idx, cur, s); };
  auto insertable = [&](int s) {
    return !contains(cur.selected_subgroups, s) && clusters_unserved(s);
  };
  // Tabu to insert while eta > -alpha; tabu to remove while eta < alpha.
  auto tabu_to_insert = [&](int s) { return state.eta[s] > -params.alpha; };
  auto tabu_to_remove = [&](int s) { return state.eta[s] < params.alpha; };

  auto try_insert = [&](int s, MoveKind kind) -> NeighborResult {
    Solution next = insert_subgroup(in, idx, cur, s);
    if (next.cost <= budget) return {kind, s, std::move(next)};
    return {};
  };
  auto try_remove = [&](int s, MoveKind kind) -> NeighborResult {
    Solution next = remove_subgroup(in, idx, cur, s);
    if (next.cost <= budget) return {kind, s, std::move(next)};
    return {};
  };
  auto pick = [&rng](const std::vector<int>& candidates) {
    return candidates[rng.next_below(candidates.size())];
  };

  std::vector<int> cand;

  // 1. Non-tabu insertion: one random admissible subgroup.
  cand.clear();
  for (int s : idx.client_subgroups)
    if (insertable(s) && !tabu_to_insert(s)) cand.push_back(s);
  if (!cand.empty()) {
    auto r = try_insert(pick(cand), MoveKind::kNonTabuInsertion);
    if (r.move != MoveKind::kNone) return r;
  }

  // 2. Old removal: a subgroup that overstayed the long-term threshold.
  cand.clear();
  for (int s : idx.client_subgroups)
    if (contains(cur.selected_subgroups, s) &&
        state.eta[s] > params.resolved_old_removal_threshold())
      cand.push_back(s);
  if (!cand.empty()) {
    auto r = try_remove(pick(cand), MoveKind::kOldRemoval);
    if (r.move != MoveKind::kNone) return r;
  }

  // 3. Tabu insertion: the highest-aspiration tabu subgroup, unconditionally.
  {
    int best = -1;
    for (int s : idx.client_subgroups) {
      if (!insertable(s) || !tabu_to_insert(s)) continue;
      if (best < 0 || state.aspiration[s] > state.aspiration[best] + kFeasibilityTol)
        best = s;
    }
    if (best >= 0) {
      auto r = try_insert(best, MoveKind::kTabuInsertion);
      if (r.move != MoveKind::kNone) return r;
    }
  }

  // 4. Random insertion: tabu status ignored.
  cand.clear();
  for (int s : idx.client_subgroups)
    if (insertable(s)) cand.push_back(s);
  if (!cand.empty()) {
    auto r = try_insert(pick(cand), MoveKind::kRandomInsertion);
    if (r.move != MoveKind::kNone) return r;
  }

  // 5. Non-tabu removal.
  cand.clear();
  for (int s : idx.client_subgroups)
    if (contains(cur.selected_subgroups, s) && !tabu_to_remove(s))
      cand.push_back(s);
  if (!cand.empty()) {
    auto r = try_remove(pick(cand), MoveKind::kNonTabuRemoval);
    if (r.move != MoveKind::kNone) return r;
  }

  // 6. Random removal.
  cand.clear();
  for (int s : idx.client_subgroups)
    if (contains(cur.selected_subgroups, s)) cand.push_back(s);
  if (!cand.empty()) {
    auto r = try_remove(pick(cand), MoveKind::kRandomRemoval);
    if (r.move != MoveKind::kNone) return r;
  }

  return {};
}

int rotation_period(const InstanceIndex& idx, const SearchParams& params) {
  const int ends = std::max<int>(1, static_cast<int>(idx.end_subgroups.size()));
  return std::max(1, params.beta / ends);
}

int rotate_endpoint(const Instance& in, const InstanceIndex& idx,
                    TabuState& state) {
  if (in.is_circular())
    throw std::logic_error("cannot rotate the endpoint of a circular route");

  // End subgroup that has been out of the solution the longest.
  int target = idx.end_subgroups.front();
  for (int s : idx.end_subgroups)
    if (state.eta[s] < state.eta[target]) target = s;

  state.end_rotation_counter = 0;
  const int new_end = in.subgroups[target].vertex_ids.front();
  Solution& cur = state.current;
  if (!cur.route.empty() && cur.route.back() == new_end) return new_end;

  cur.route.back() = new_end;
  for (int s : idx.end_subgroups) {
    if (contains(cur.selected_subgroups, s)) {
      erase_sorted(cur.selected_subgroups, s);
      state.eta[s] = 0;
    }
  }
  insert_sorted(cur.selected_subgroups, target);
  state.eta[target] = 1;

  cur.route = two_opt(in, std::move(cur.route), false);
  cur.cost = route_cost(in, cur.route, false);
  cur.reward = recompute_reward(in, cur.selected_subgroups);

  // Rewiring the endpoint can overrun the budget; shed the subgroups whose
  // removal saves the most until the route fits again.
  while (cur.cost > in.budget + kFeasibilityTol) {
    int best = -1;
    double best_cost = cur.cost;
    for (int s : idx.client_subgroups) {
      if (!contains(cur.selected_subgroups, s)) continue;
      const Solution trial = remove_subgroup(in, idx, cur, s);
      if (best < 0 || trial.cost < best_cost - kFeasibilityTol) {
        best = s;
        best_cost = trial.cost;
      }
    }
    if (best < 0) break;  // nothing left to shed
    cur = remove_subgroup(in, idx, cur, best);
    state.eta[best] = 0;
  }

  for (int s : cur.selected_subgroups)
    state.aspiration[s] = std::max(state.aspiration[s], cur.reward);
  return new_end;
}

int rotate_endpoint(const Instance& in, TabuState& state) {
  return rotate_endpoint(in, InstanceIndex(in), state);
}

TabuResult solve_tabu(const Instance& in, const SearchParams& params,
                      const IterationObserver& observer) {
  require_valid(params);
  const auto t0 = std::chrono::steady_clock::now();

  const InstanceIndex idx(in);
  Rng rng(params.seed);

  TabuState state;
  state.eta.assign(in.subgroups.size(), 0);
  state.aspiration.assign(in.subgroups.size(), 0.0);

  state.current = initial_solution(in, idx, params, rng);
  TabuResult result;

  if (state.current.cost > in.budget + kFeasibilityTol) {
    // Even the bare start-to-end route does not fit.
    result.stats.feasible = false;
    result.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
  }

  for (int s : state.current.selected_subgroups) {
    state.eta[s] = 1;
    state.aspiration[s] = state.current.reward;
  }
  state.best = state.current;

  const int period = rotation_period(idx, params);
  std::int64_t iteration = 0;

  while (state.iterations_without_improvement <= params.beta &&
         (params.max_iterations == 0 || iteration < params.max_iterations)) {
    ++iteration;

    // Long-term memory tick: in-solution subgroups age up, others age down.
    for (std::size_t s = 0; s < state.eta.size(); ++s)
      state.eta[s] += contains(state.current.selected_subgroups,
                               static_cast<int>(s))
                          ? 1
                          : -1;

    NeighborResult neighbor = next_neighbor(in, idx, state, params, rng);
    bool improved = false;
    if (neighbor.move != MoveKind::kNone) {
      state.current = std::move(neighbor.solution);
      state.eta[neighbor.subgroup] =
          contains(state.current.selected_subgroups, neighbor.subgroup) ? 1 : 0;
      for (int s : state.current.selected_subgroups)
        state.aspiration[s] =
            std::max(state.aspiration[s], state.current.reward);
      if (better_solution(state.current, state.best)) {
        state.best = state.current;
        improved = true;
        ++result.stats.improvements;
      }
    }

    if (improved) {
      state.iterations_without_improvement = 0;
      state.end_rotation_counter = 0;
    } else {
      ++state.iterations_without_improvement;
      ++state.end_rotation_counter;
    }

    TraceEntry entry{iteration, neighbor.move, neighbor.subgroup,
                     state.current.reward, state.current.cost};
    result.stats.trace.push_back(entry);
    if (observer) observer(state, entry);

    if (!in.is_circular() && state.end_rotation_counter >= period &&
        idx.end_subgroups.size() > 1) {
      rotate_endpoint(in, idx, state);
      if (better_solution(state.current, state.best)) {
        state.best = state.current;
        ++result.stats.improvements;
        state.iterations_without_improvement = 0;
      }
      TraceEntry rot{iteration, MoveKind::kEndpointRotation, -1,
                     state.current.reward, state.current.cost};
      result.stats.trace.push_back(rot);
      if (observer) observer(state, rot);
    }
  }

  result.best = state.best;
  result.stats.iterations = iteration;
  result.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace cops::tabu
