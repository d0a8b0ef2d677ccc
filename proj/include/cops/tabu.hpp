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

#ifndef COPS_TABU_HPP_
#define COPS_TABU_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cops/evaluate.hpp"
#include "cops/index.hpp"
#include "cops/instance.hpp"
#include "cops/rng.hpp"

namespace cops::tabu {

struct SearchParams {
  int alpha = 10;  // tabu tenure; must stay below beta
  int beta = 300;  // stop after this many iterations without improvement
  // Long-term removal cutoff: a subgroup that stayed in the solution for more
  // than this many iterations becomes an "old removal" candidate. Zero means
  // "same as beta".
  int old_removal_threshold = 0;
  int lambda = 5;  // initial solution gives up after this many misses in a row
  std::uint64_t seed = 1;
  std::int64_t max_iterations = 0;  // 0 = no hard cap

  int resolved_old_removal_threshold() const {
    return old_removal_threshold > 0 ? old_removal_threshold : beta;
  }
};

// Throws std::invalid_argument when the parameters are unusable
// (non-positive counts or alpha >= beta).
void require_valid(const SearchParams& params);

enum class MoveKind {
  kNone,  // exhausted neighbourhood, iteration counted as non-improving
  kNonTabuInsertion,
  kOldRemoval,
  kTabuInsertion,
  kRandomInsertion,
  kNonTabuRemoval,
  kRandomRemoval,
  kEndpointRotation,
};

const char* move_kind_name(MoveKind kind);

// Search state. eta[i] is the signed long-term memory of subgroup i: >= 1
// while the subgroup sits in the current solution (number of iterations in),
// <= 0 while it is out. aspiration[i] is the best reward of any solution that
// ever contained subgroup i.
struct TabuState {
  std::vector<int> eta;
  std::vector<double> aspiration;
  int end_rotation_counter = 0;
  Solution current;
  Solution best;
  int iterations_without_improvement = 0;
};

struct NeighborResult {
  MoveKind move = MoveKind::kNone;
  int subgroup = -1;
  Solution solution;  // meaningful only when move != kNone
};

struct TraceEntry {
  std::int64_t iteration;
  MoveKind move;
  int subgroup;  // -1 when no move applied
  double reward;
  double cost;
};

struct RunStats {
  std::int64_t iterations = 0;
  std::int64_t improvements = 0;
  double wall_seconds = 0.0;
  bool feasible = true;
  std::vector<TraceEntry> trace;
};

struct TabuResult {
  std::optional<Solution> best;  // empty when no feasible route exists
  RunStats stats;
};

// Renders the per-iteration trace as CSV (iteration,move,reward,cost).
std::string trace_csv(const std::vector<TraceEntry>& trace);

// Best-improvement 2-opt. Keeps route[0] fixed (and the last vertex too for
// non-circular routes); stops when no reversal gains more than 1e-9. The
// result never costs more than the input.
std::vector<int> two_opt(const Instance& instance, std::vector<int> route,
                         bool circular);

// Random-cluster-order greedy seed: per cluster the subgroup with the best
// reward-per-vertex ratio is tried, kept when it fits the budget, and the
// construction stops once `lambda` consecutive tries exceeded the budget.
Solution initial_solution(const Instance& instance, const SearchParams& params);
Solution initial_solution(const Instance& instance, const InstanceIndex& index,
                          const SearchParams& params, Rng& rng);

// Inserts every missing vertex of the subgroup at its cheapest position (in
// subgroup declaration order), re-optimizes with 2-opt, and marks the
// subgroup selected. Budget is not enforced here. Throws when another
// subgroup of one of its clusters is already selected.
Solution insert_subgroup(const Instance& instance, const Solution& solution,
                         int subgroup);
Solution insert_subgroup(const Instance& instance, const InstanceIndex& index,
                         const Solution& solution, int subgroup);

// Splices out the vertices that belong to this subgroup only (vertices shared
// with another selected subgroup, the start vertex and the route endpoint
// stay) and drops the subgroup from the selected set. Throws when the
// subgroup is not selected.
Solution remove_subgroup(const Instance& instance, const Solution& solution,
                         int subgroup);
Solution remove_subgroup(const Instance& instance, const InstanceIndex& index,
                         const Solution& solution, int subgroup);

// Tries the six move types in their fixed order and returns the first
// budget-feasible result. Each move probes one candidate: a uniformly random
// one for the random moves, the maximum-aspiration candidate for the tabu
// insertion. move == kNone signals an exhausted neighbourhood.
NeighborResult next_neighbor(const Instance& instance,
                             const InstanceIndex& index, TabuState& state,
                             const SearchParams& params, Rng& rng);

// Iterations without improvement after which a non-circular search relocates
// its endpoint: beta divided by the number of end subgroups.
int rotation_period(const InstanceIndex& index, const SearchParams& params);

// Moves the route endpoint to the end subgroup with the minimum long-term
// memory (the one that has been outside the solution longest; ties go to the
// lowest id), re-optimizes, and restores budget feasibility by greedily
// dropping selected subgroups when needed. Returns the new endpoint vertex.
// Throws std::logic_error on circular instances.
int rotate_endpoint(const Instance& instance, TabuState& state);
int rotate_endpoint(const Instance& instance, const InstanceIndex& index,
                    TabuState& state);

// Called once per iteration after the state was updated.
using IterationObserver =
    std::function<void(const TabuState& state, const TraceEntry& entry)>;

// Runs the full search. The returned best solution is always feasible;
// `best` is empty only when the instance admits no feasible route at all
// (a non-circular instance whose budget cannot reach the end cluster).
TabuResult solve_tabu(const Instance& instance, const SearchParams& params,
                      const IterationObserver& observer = {});

}  // namespace cops::tabu

#endif  // COPS_TABU_HPP_
