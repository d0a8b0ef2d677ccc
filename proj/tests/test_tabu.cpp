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

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "cops/evaluate.hpp"
#include "cops/exact.hpp"
#include "cops/held_karp.hpp"
#include "cops/index.hpp"
#include "cops/rng.hpp"
#include "cops/tabu.hpp"
#include "doctest.h"
#include "test_support.hpp"

using cops::Instance;
using cops::InstanceIndex;
using cops::Solution;
using namespace cops::tabu;
using test_support::euclid_instance;

TEST_CASE("two_opt leaves short routes alone") {
  const Instance in = euclid_instance(
      {{0, 0}, {5, 1}, {2, 7}}, {{0.0, {0}}, {1.0, {1}}, {1.0, {2}}},
      {{0}, {1}, {2}}, 0, 0, 100.0);
  const std::vector<int> r3{0, 2, 1};
  CHECK(two_opt(in, r3, true) == r3);
  CHECK(two_opt(in, {0, 1}, true) == std::vector<int>{0, 1});
  CHECK(two_opt(in, {0}, false) == std::vector<int>{0});
}

TEST_CASE("two_opt uncrosses the unit square") {
  const Instance in =
      euclid_instance({{0, 0}, {1, 0}, {0, 1}, {1, 1}},
                      {{0.0, {0}}, {1.0, {1}}, {1.0, {2}}, {1.0, {3}}},
                      {{0}, {1}, {2}, {3}}, 0, 0, 100.0);
  const std::vector<int> crossing{0, 1, 2, 3};  // cost 2 + 2*sqrt(2)
  const std::vector<int> fixed = two_opt(in, crossing, true);
  CHECK(cops::route_cost(in, fixed, true) == doctest::Approx(4.0));
  CHECK(fixed.front() == 0);
}

TEST_CASE("two_opt never worsens a route and pins the endpoints") {
  cops::Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<cops::Point> pts;
    std::vector<test_support::SgSpec> sgs;
    std::vector<std::vector<int>> cls;
    for (int v = 0; v < 10; ++v) {
      pts.push_back({rng.next_in(0, 100), rng.next_in(0, 100)});
      sgs.push_back({1.0, {v}});
      cls.push_back({v});
    }
    const Instance in = euclid_instance(pts, sgs, cls, 0, 0, 1e9);
    std::vector<int> route(10);
    std::iota(route.begin(), route.end(), 0);
    rng.shuffle(route);
    std::rotate(route.begin(), std::find(route.begin(), route.end(), 0),
                route.end());

    const bool circular = trial % 2 == 0;
    const std::vector<int> improved = two_opt(in, route, circular);
    CHECK(cops::route_cost(in, improved, circular) <=
          cops::route_cost(in, route, circular) + 1e-9);
    CHECK(improved.front() == route.front());
    if (!circular) CHECK(improved.back() == route.back());
  }
}

namespace {

// One client cluster with a two-vertex subgroup A and a richer singleton B,
// plus a second cluster with one far-away subgroup.
Instance profitability_instance() {
  return euclid_instance(
      {{0, 0}, {2, 0}, {2, 2}, {0, 3}, {40, 0}},
      {{0.0, {0}}, {10.0, {1, 2}}, {9.0, {3}}, {1.0, {4}}},
      {{0}, {1, 2}, {3}}, 0, 0, 100.0);
}

}  // namespace

TEST_CASE("initial solution picks the best reward-per-vertex subgroup") {
  const Instance in = profitability_instance();
  SearchParams params;
  params.seed = 5;
  const Solution sol = initial_solution(in, params);
  // Subgroup 1 pays 10/2 = 5 per vertex, subgroup 2 pays 9: 2 wins.
  CHECK(std::binary_search(sol.selected_subgroups.begin(),
                           sol.selected_subgroups.end(), 2));
  CHECK(!std::binary_search(sol.selected_subgroups.begin(),
                            sol.selected_subgroups.end(), 1));
  CHECK(cops::validate(in, sol).empty());
}

TEST_CASE("initial solution respects a zero budget") {
  Instance in = profitability_instance();
  in.budget = 0.0;
  SearchParams params;
  const Solution sol = initial_solution(in, params);
  CHECK(sol.route == std::vector<int>{0});
  CHECK(sol.reward == 0.0);
  CHECK(cops::validate(in, sol).empty());
}

TEST_CASE("initial solution takes everything when the budget allows") {
  // Two single-subgroup clusters close to the depot.
  const Instance in = euclid_instance(
      {{0, 0}, {1, 0}, {0, 1}}, {{0.0, {0}}, {2.0, {1}}, {3.0, {2}}},
      {{0}, {1}, {2}}, 0, 0, 1000.0);
  SearchParams params;
  params.seed = 17;
  const Solution sol = initial_solution(in, params);
  CHECK(sol.selected_subgroups == std::vector<int>{0, 1, 2});
  CHECK(sol.reward == doctest::Approx(5.0));
}

TEST_CASE("insert_subgroup covers the spec'd cases") {
  const Instance in = euclid_instance(
      {{0, 0}, {3, 0}, {3, 4}}, {{0.0, {0}}, {2.0, {1}}, {4.0, {1, 2}}},
      {{0}, {1}, {2}}, 0, 0, 100.0);
  const InstanceIndex idx(in);
  const Solution base = cops::evaluate(in, {0}, {0});

  SUBCASE("single vertex into a one-vertex tour costs the round trip") {
    const Solution sol = insert_subgroup(in, idx, base, 1);
    CHECK(sol.cost == doctest::Approx(6.0));
    CHECK(sol.reward == doctest::Approx(2.0));
    CHECK(sol.route == std::vector<int>{0, 1});
  }
  SUBCASE("inserting a subgroup whose vertices are already on the route") {
    Solution with_both = insert_subgroup(in, idx, base, 2);
    const double cost_before = with_both.cost;
    // Subgroup 1 shares vertex 1 with subgroup 2: pure selection.
    const Solution sol = insert_subgroup(in, idx, with_both, 1);
    CHECK(sol.route == with_both.route);
    CHECK(sol.cost == doctest::Approx(cost_before));
    CHECK(sol.reward == doctest::Approx(with_both.reward + 2.0));
  }
  SUBCASE("cluster conflicts are rejected") {
    const Instance conflicted = euclid_instance(
        {{0, 0}, {3, 0}, {3, 4}}, {{0.0, {0}}, {2.0, {1}}, {4.0, {2}}},
        {{0}, {1, 2}}, 0, 0, 100.0);
    const InstanceIndex cidx(conflicted);
    const Solution first =
        insert_subgroup(conflicted, cidx, cops::evaluate(conflicted, {0}, {0}), 1);
    CHECK_THROWS_AS((void)insert_subgroup(conflicted, cidx, first, 2),
                    std::invalid_argument);
  }
}

TEST_CASE("insertion plus 2-opt never beats the optimal tour") {
  cops::Rng rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance in = test_support::small_random_instance(900 + trial, 9, 1.0);
    const InstanceIndex idx(in);
    Solution sol = cops::evaluate(in, {idx.start_vertex}, {idx.start_subgroup});
    for (int s : idx.client_subgroups) {
      bool conflict = false;
      for (int cl : idx.clusters_of_subgroup[s])
        for (int other : in.clusters[cl].subgroup_ids)
          if (other != s &&
              std::binary_search(sol.selected_subgroups.begin(),
                                 sol.selected_subgroups.end(), other))
            conflict = true;
      if (!conflict) sol = insert_subgroup(in, idx, sol, s);
    }
    // Optimal closed tour over the exact same vertex set.
    const double optimal = test_support::perm_min_tour(in, sol.route);
    CHECK(sol.cost >= optimal - 1e-9);
  }
}

TEST_CASE("remove_subgroup splices vertices out") {
  const Instance in = euclid_instance(
      {{0, 0}, {3, 0}, {3, 4}, {0, 4}},
      {{0.0, {0}}, {2.0, {1}}, {4.0, {1, 2}}, {1.0, {3}}},
      {{0}, {1}, {2}, {3}}, 0, 0, 100.0);
  const InstanceIndex idx(in);

  SUBCASE("removing the only subgroup leaves the bare depot") {
    Solution sol = cops::evaluate(in, {0}, {0});
    sol = insert_subgroup(in, idx, sol, 3);
    sol = remove_subgroup(in, idx, sol, 3);
    CHECK(sol.route == std::vector<int>{0});
    CHECK(sol.reward == 0.0);
  }
  SUBCASE("shared vertices stay behind") {
    Solution sol = cops::evaluate(in, {0}, {0});
    sol = insert_subgroup(in, idx, sol, 1);
    sol = insert_subgroup(in, idx, sol, 2);
    sol = remove_subgroup(in, idx, sol, 2);
    // Vertex 1 is shared with still-selected subgroup 1; vertex 2 leaves.
    CHECK(std::count(sol.route.begin(), sol.route.end(), 1) == 1);
    CHECK(std::count(sol.route.begin(), sol.route.end(), 2) == 0);
  }
  SUBCASE("removing an unselected subgroup throws") {
    Solution sol = cops::evaluate(in, {0}, {0});
    CHECK_THROWS_AS((void)remove_subgroup(in, idx, sol, 1),
                    std::invalid_argument);
  }
}

TEST_CASE("removal never lengthens a euclidean route") {
  for (int trial = 0; trial < 30; ++trial) {
    const Instance in = test_support::small_random_instance(400 + trial, 10, 1.0);
    const InstanceIndex idx(in);
    Solution sol = cops::evaluate(in, {idx.start_vertex}, {idx.start_subgroup});
    std::vector<int> inserted;
    for (int s : idx.client_subgroups) {
      bool conflict = false;
      for (int cl : idx.clusters_of_subgroup[s])
        for (int other : in.clusters[cl].subgroup_ids)
          if (other != s &&
              std::binary_search(sol.selected_subgroups.begin(),
                                 sol.selected_subgroups.end(), other))
            conflict = true;
      if (!conflict) {
        sol = insert_subgroup(in, idx, sol, s);
        inserted.push_back(s);
      }
    }
    for (int s : inserted) {
      const Solution smaller = remove_subgroup(in, idx, sol, s);
      CHECK(smaller.cost <= sol.cost + 1e-9);
      sol = smaller;
    }
  }
}

TEST_CASE("tenure gates re-insertion: alpha iterations must pass") {
  // One client subgroup; alpha = 1 makes it insertable after one tick.
  const Instance in = euclid_instance(
      {{0, 0}, {1, 0}}, {{0.0, {0}}, {5.0, {1}}}, {{0}, {1}}, 0, 0, 100.0);
  const InstanceIndex idx(in);
  SearchParams params;
  params.alpha = 1;
  params.beta = 10;
  params.seed = 3;

  TabuState state;
  state.eta.assign(2, 0);
  state.aspiration.assign(2, 0.0);
  state.current = cops::evaluate(in, {0}, {0});
  cops::Rng rng(3);

  // eta = 0: still inside the insertion tenure, move 1 must not fire, but the
  // unconditional tabu insertion (move 3) picks it up.
  NeighborResult r = next_neighbor(in, idx, state, params, rng);
  CHECK(r.move == MoveKind::kTabuInsertion);

  // After one tick the subgroup ages to eta = -1 <= -alpha: move 1 fires.
  state.eta[1] = -1;
  r = next_neighbor(in, idx, state, params, rng);
  CHECK(r.move == MoveKind::kNonTabuInsertion);
  CHECK(r.subgroup == 1);
}

TEST_CASE("saturated solutions fall through to removal moves") {
  const Instance in = euclid_instance(
      {{0, 0}, {1, 0}, {0, 1}}, {{0.0, {0}}, {2.0, {1}}, {3.0, {2}}},
      {{0}, {1}, {2}}, 0, 0, 1000.0);
  const InstanceIndex idx(in);
  SearchParams params;
  params.alpha = 10;
  params.beta = 20;
  TabuState state;
  state.eta.assign(3, 0);
  state.aspiration.assign(3, 0.0);
  Solution sol = cops::evaluate(in, {0}, {0});
  sol = insert_subgroup(in, idx, sol, 1);
  sol = insert_subgroup(in, idx, sol, 2);
  state.current = sol;
  state.eta[1] = state.eta[2] = 1;  // fresh insertions, tabu to remove
  cops::Rng rng(9);

  const NeighborResult r = next_neighbor(in, idx, state, params, rng);
  CHECK(r.move == MoveKind::kRandomRemoval);

  // With aged memory the non-tabu removal takes precedence.
  state.eta[1] = state.eta[2] = params.alpha;
  const NeighborResult r2 = next_neighbor(in, idx, state, params, rng);
  CHECK(r2.move == MoveKind::kNonTabuRemoval);
}

TEST_CASE("neighbors returned by the move ladder are always feasible") {
  for (int trial = 0; trial < 15; ++trial) {
    const Instance in =
        test_support::small_random_instance(100 + trial, 12, 0.6);
    SearchParams params;
    params.seed = trial;
    params.beta = 60;
    params.alpha = 5;
    const TabuResult result = solve_tabu(
        in, params, [&](const TabuState& state, const TraceEntry&) {
          CHECK(cops::validate(in, state.current).empty());
        });
    REQUIRE(result.best.has_value());
    CHECK(cops::validate(in, *result.best).empty());
  }
}

TEST_CASE("long-term memory keeps its sign invariant") {
  const Instance in = test_support::small_random_instance(55, 12, 0.7);
  SearchParams params;
  params.seed = 11;
  params.beta = 80;
  params.alpha = 4;
  solve_tabu(in, params, [&](const TabuState& state, const TraceEntry&) {
    for (std::size_t s = 0; s < state.eta.size(); ++s) {
      const bool inside =
          std::binary_search(state.current.selected_subgroups.begin(),
                             state.current.selected_subgroups.end(),
                             static_cast<int>(s));
      if (inside) {
        CHECK(state.eta[s] >= 1);
      } else {
        CHECK(state.eta[s] <= 0);
      }
    }
  });
}

TEST_CASE("best solution only improves, lexicographically") {
  const Instance in = test_support::small_random_instance(77, 12, 0.7);
  SearchParams params;
  params.seed = 2;
  double best_reward = -1.0;
  double best_cost = 0.0;
  solve_tabu(in, params, [&](const TabuState& state, const TraceEntry&) {
    if (best_reward >= 0.0) {
      const bool same = std::abs(state.best.reward - best_reward) <= 1e-9;
      CHECK(state.best.reward >= best_reward - 1e-9);
      if (same) CHECK(state.best.cost <= best_cost + 1e-9);
    }
    best_reward = state.best.reward;
    best_cost = state.best.cost;
  });
}

TEST_CASE("a removed subgroup re-enters via move 1 only after its tenure") {
  const Instance in = test_support::small_random_instance(123, 12, 0.55);
  SearchParams params;
  params.seed = 8;
  params.alpha = 6;
  params.beta = 120;
  const TabuResult result = solve_tabu(in, params);
  std::map<int, std::int64_t> removed_at;
  for (const TraceEntry& e : result.stats.trace) {
    switch (e.move) {
      case MoveKind::kOldRemoval:
      case MoveKind::kNonTabuRemoval:
      case MoveKind::kRandomRemoval:
        removed_at[e.subgroup] = e.iteration;
        break;
      case MoveKind::kNonTabuInsertion: {
        const auto it = removed_at.find(e.subgroup);
        if (it != removed_at.end())
          CHECK(e.iteration - it->second >= params.alpha);
        break;
      }
      default:
        break;
    }
  }
}

TEST_CASE("identical seeds give identical runs") {
  const Instance in = test_support::small_random_instance(321, 12, 0.6);
  SearchParams params;
  params.seed = 13;
  const TabuResult a = solve_tabu(in, params);
  const TabuResult b = solve_tabu(in, params);
  REQUIRE(a.best.has_value());
  REQUIRE(b.best.has_value());
  CHECK(*a.best == *b.best);
  CHECK(trace_csv(a.stats.trace) == trace_csv(b.stats.trace));

  SearchParams other = params;
  other.seed = 14;
  const TabuResult c = solve_tabu(in, other);
  REQUIRE(c.best.has_value());  // different seed may or may not differ; just runs
}

TEST_CASE("zero budget yields the stay-home solution") {
  Instance in = profitability_instance();
  in.budget = 0.0;
  SearchParams params;
  const TabuResult result = solve_tabu(in, params);
  REQUIRE(result.best.has_value());
  CHECK(result.best->reward == 0.0);
  CHECK(result.best->route == std::vector<int>{0});
}

TEST_CASE("invalid parameters are rejected") {
  SearchParams params;
  params.alpha = 300;
  params.beta = 300;
  CHECK_THROWS_AS(require_valid(params), std::invalid_argument);
  params.alpha = 0;
  CHECK_THROWS_AS(require_valid(params), std::invalid_argument);
}

namespace {

// Start at the origin, three singleton end subgroups to the east, one client
// subgroup in between.
Instance rotation_instance() {
  return euclid_instance(
      {{0, 0}, {5, 0}, {10, 0}, {10, 3}, {10, -3}},
      {{0.0, {0}}, {4.0, {1}}, {0.0, {2}}, {0.0, {3}}, {0.0, {4}}},
      {{0}, {1}, {2, 3, 4}}, 0, 2, 100.0);
}

}  // namespace

TEST_CASE("rotation period divides the stop constant by the endpoint count") {
  const Instance in = rotation_instance();
  const InstanceIndex idx(in);
  SearchParams params;
  params.beta = 300;
  CHECK(rotation_period(idx, params) == 100);

  const Instance single = euclid_instance(
      {{0, 0}, {5, 0}}, {{0.0, {0}}, {0.0, {1}}}, {{0}, {1}}, 0, 1, 100.0);
  const InstanceIndex sidx(single);
  CHECK(rotation_period(sidx, params) == 300);
}

TEST_CASE("rotate_endpoint moves to the longest-outside end subgroup") {
  const Instance in = rotation_instance();
  const InstanceIndex idx(in);
  TabuState state;
  state.eta.assign(5, 0);
  state.aspiration.assign(5, 0.0);
  state.current = cops::evaluate(in, {0, 2}, {0, 2});
  state.eta[2] = 3;   // current endpoint, inside
  state.eta[3] = -5;
  state.eta[4] = -9;  // outside the longest
  const int endpoint = rotate_endpoint(in, idx, state);
  CHECK(endpoint == 4);
  CHECK(state.current.route.back() == 4);
  CHECK(cops::validate(in, state.current).empty());
  CHECK(state.eta[4] == 1);
  CHECK(state.eta[2] == 0);

  SUBCASE("minimum-eta ties break to the lowest subgroup id") {
    state.eta[2] = 1;  // endpoint 4 is now current
    state.eta[3] = -7;
    state.eta[4] = 1;
    CHECK(rotate_endpoint(in, idx, state) == 3);
  }
}

TEST_CASE("single end subgroup rotation is a no-op") {
  const Instance in = euclid_instance(
      {{0, 0}, {5, 0}, {2, 2}}, {{0.0, {0}}, {0.0, {1}}, {3.0, {2}}},
      {{0}, {1}, {2}}, 0, 1, 100.0);
  const InstanceIndex idx(in);
  TabuState state;
  state.eta.assign(3, 0);
  state.aspiration.assign(3, 0.0);
  state.current = cops::evaluate(in, {0, 1}, {0, 1});
  state.eta[1] = 2;
  CHECK(rotate_endpoint(in, idx, state) == 1);
  CHECK(state.current.route == std::vector<int>{0, 1});
}

TEST_CASE("rotate_endpoint refuses circular instances") {
  const Instance in = profitability_instance();
  TabuState state;
  state.eta.assign(in.subgroups.size(), 0);
  state.aspiration.assign(in.subgroups.size(), 0.0);
  state.current = cops::evaluate(in, {0}, {0});
  CHECK_THROWS_AS((void)rotate_endpoint(in, state), std::logic_error);
}

TEST_CASE("non-circular search stays feasible and uses its endpoints") {
  for (int trial = 0; trial < 10; ++trial) {
    const Instance in =
        test_support::small_random_instance(700 + trial, 12, 0.8, false);
    const InstanceIndex idx(in);
    // The cheapest start-to-end hop decides whether anything is feasible.
    double bare = std::numeric_limits<double>::infinity();
    for (int v : idx.end_vertices)
      bare = std::min(bare, cops::edge_cost(in, idx.start_vertex, v));
    SearchParams params;
    params.seed = trial;
    params.beta = 60;
    const TabuResult result = solve_tabu(in, params);
    if (!result.best.has_value()) {
      CHECK(bare > in.budget);
      continue;
    }
    CHECK(cops::validate(in, *result.best).empty());
    CHECK(idx.is_end_vertex(result.best->route.back()));
  }
}
