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

// Shared test helpers: instance builders, brute-force oracles, and random
// toy-problem generators. Everything here is deliberately independent of the
// solver implementations it is used to check (brute force enumerates; the
// toys are priced by permutation or by the separately verified subset DP).

#ifndef COPS_TESTS_TEST_SUPPORT_HPP_
#define COPS_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cops/evaluate.hpp"
#include "cops/generator.hpp"
#include "cops/held_karp.hpp"
#include "cops/instance.hpp"
#include "cops/rng.hpp"

namespace test_support {

struct SgSpec {
  double reward;
  std::vector<int> verts;
};

// Compact Euclidean instance builder for hand-written cases.
inline cops::Instance euclid_instance(std::vector<cops::Point> pts,
                                      std::vector<SgSpec> sgs,
                                      std::vector<std::vector<int>> clusters,
                                      int start, int end, double budget) {
  cops::Instance in;
  in.name = "test";
  in.metric = cops::Metric::kEuclidean;
  in.num_vertices = static_cast<int>(pts.size());
  in.coords = std::move(pts);
  for (std::size_t i = 0; i < sgs.size(); ++i)
    in.subgroups.push_back(
        {static_cast<int>(i), sgs[i].reward, sgs[i].verts});
  for (std::size_t i = 0; i < clusters.size(); ++i)
    in.clusters.push_back({static_cast<int>(i), clusters[i]});
  in.start_cluster_id = start;
  in.end_cluster_id = end;
  in.budget = budget;
  return in;
}

inline cops::Instance matrix_instance(int n, std::vector<double> matrix,
                                      std::vector<SgSpec> sgs,
                                      std::vector<std::vector<int>> clusters,
                                      int start, int end, double budget) {
  cops::Instance in;
  in.name = "test-matrix";
  in.metric = cops::Metric::kExplicitMatrix;
  in.num_vertices = n;
  in.matrix = std::move(matrix);
  for (std::size_t i = 0; i < sgs.size(); ++i)
    in.subgroups.push_back(
        {static_cast<int>(i), sgs[i].reward, sgs[i].verts});
  for (std::size_t i = 0; i < clusters.size(); ++i)
    in.clusters.push_back({static_cast<int>(i), clusters[i]});
  in.start_cluster_id = start;
  in.end_cluster_id = end;
  in.budget = budget;
  return in;
}

// Minimum closed-tour cost over the given vertices (first entry is the fixed
// start) by checking every permutation of the rest.
inline double perm_min_tour(const cops::Instance& in, std::vector<int> verts) {
  if (verts.size() <= 1) return 0.0;
  std::vector<int> rest(verts.begin() + 1, verts.end());
  std::sort(rest.begin(), rest.end());
  double best = std::numeric_limits<double>::infinity();
  do {
    double cost = 0.0;
    int at = verts.front();
    for (int v : rest) {
      cost += cops::edge_cost(in, at, v);
      at = v;
    }
    cost += cops::edge_cost(in, at, verts.front());
    best = std::min(best, cost);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

// Minimum path cost start -> (middle in any order) -> end.
inline double perm_min_path(const cops::Instance& in, int start,
                            std::vector<int> middle, int end) {
  std::sort(middle.begin(), middle.end());
  double best = std::numeric_limits<double>::infinity();
  do {
    double cost = 0.0;
    int at = start;
    for (int v : middle) {
      cost += cops::edge_cost(in, at, v);
      at = v;
    }
    cost += cops::edge_cost(in, at, end);
    best = std::min(best, cost);
  } while (std::next_permutation(middle.begin(), middle.end()));
  return best;
}

// ---- random toy sources for the reduction adapters ----------------------

struct ToySource {
  std::vector<cops::Point> pts;        // index = vertex, 0 is the depot
  std::vector<double> vertex_rewards;  // used by set-orienteering toys
  std::vector<double> set_rewards;     // used by clustered toys
  std::vector<std::vector<int>> sets;  // disjoint client sets (no depot)
  double tmax = 0.0;
};

// Vertices in [0,50]^2, 2-4 disjoint sets over 3..9 client vertices.
inline ToySource random_toy(cops::Rng& rng, int max_vertices) {
  ToySource toy;
  const int n_clients = 3 + static_cast<int>(rng.next_below(
                                std::max(1, max_vertices - 3)));
  toy.pts.push_back({rng.next_in(0, 50), rng.next_in(0, 50)});  // depot
  toy.vertex_rewards.push_back(0.0);
  for (int v = 0; v < n_clients; ++v) {
    toy.pts.push_back({rng.next_in(0, 50), rng.next_in(0, 50)});
    toy.vertex_rewards.push_back(1.0 + static_cast<double>(rng.next_below(9)));
  }
  const int n_sets =
      2 + static_cast<int>(rng.next_below(std::min(3, n_clients - 1)));
  toy.sets.assign(n_sets, {});
  for (int v = 1; v <= n_clients; ++v)
    toy.sets[rng.next_below(n_sets)].push_back(v);
  // No empty sets: reassign from the fattest one.
  for (auto& set : toy.sets) {
    if (!set.empty()) continue;
    auto fattest = std::max_element(
        toy.sets.begin(), toy.sets.end(),
        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    set.push_back(fattest->back());
    fattest->pop_back();
  }
  for (std::size_t i = 0; i < toy.sets.size(); ++i)
    toy.set_rewards.push_back(1.0 + static_cast<double>(rng.next_below(9)));

  // Budget around a fraction of a loose all-vertex bound.
  double spread = 0.0;
  for (std::size_t v = 1; v < toy.pts.size(); ++v) {
    const double dx = toy.pts[v].x - toy.pts[0].x;
    const double dy = toy.pts[v].y - toy.pts[0].y;
    spread += 2.0 * std::sqrt(dx * dx + dy * dy);
  }
  toy.tmax = spread * (0.3 + 0.5 * rng.next_real());
  return toy;
}

inline std::string toy_to_sop_text(const ToySource& toy) {
  std::ostringstream os;
  os << "NAME : sop-toy\nTYPE : SOP\n";
  os << "DIMENSION : " << toy.pts.size() << "\n";
  os << "TMAX " << toy.tmax << "\n";
  os << "DEPOT 1\n";
  os << "NODE_COORD_SECTION\n";
  for (std::size_t v = 0; v < toy.pts.size(); ++v)
    os << (v + 1) << " " << toy.pts[v].x << " " << toy.pts[v].y << " "
       << toy.vertex_rewards[v] << "\n";
  os << "SET_SECTION\n";
  os << "1 1 -1\n";  // depot set
  for (std::size_t s = 0; s < toy.sets.size(); ++s) {
    os << (s + 2);
    for (int v : toy.sets[s]) os << " " << (v + 1);
    os << " -1\n";
  }
  os << "EOF\n";
  return os.str();
}

inline std::string toy_to_cop_text(const ToySource& toy) {
  std::ostringstream os;
  os << "NAME : cop-toy\nTYPE : COP\n";
  os << "DIMENSION : " << toy.pts.size() << "\n";
  os << "TMAX " << toy.tmax << "\n";
  os << "DEPOT 1\n";
  os << "NODE_COORD_SECTION\n";
  for (std::size_t v = 0; v < toy.pts.size(); ++v)
    os << (v + 1) << " " << toy.pts[v].x << " " << toy.pts[v].y << "\n";
  os << "SET_SECTION\n";
  for (std::size_t s = 0; s < toy.sets.size(); ++s) {
    os << (s + 1) << " " << toy.set_rewards[s];
    for (int v : toy.sets[s]) os << " " << (v + 1);
    os << " -1\n";
  }
  os << "EOF\n";
  return os.str();
}

inline cops::exact::HeldKarp toy_costs(const ToySource& toy) {
  const int n = static_cast<int>(toy.pts.size());
  std::vector<double> dist(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double dx = toy.pts[i].x - toy.pts[j].x;
      const double dy = toy.pts[i].y - toy.pts[j].y;
      dist[static_cast<std::size_t>(i) * n + j] = std::sqrt(dx * dx + dy * dy);
    }
  return cops::exact::HeldKarp(std::move(dist), n);
}

// Direct oracle for set-orienteering toys: pick at most one rewarded vertex
// per set, price the tour with the subset DP (itself checked against
// permutations elsewhere).
inline double sop_oracle(const ToySource& toy) {
  const cops::exact::HeldKarp hk = toy_costs(toy);
  double best = 0.0;
  std::vector<int> choice(toy.sets.size(), -1);  // -1 = skip the set
  auto recurse = [&](auto&& self, std::size_t s) -> void {
    if (s == toy.sets.size()) {
      std::uint32_t mask = 1u;
      double reward = 0.0;
      for (int v : choice) {
        if (v < 0) continue;
        mask |= 1u << v;
        reward += toy.vertex_rewards[v];
      }
      if (reward <= best) return;
      if (hk.tour_cost(mask) <= toy.tmax + 1e-9) best = reward;
      return;
    }
    self(self, s + 1);
    for (int v : toy.sets[s]) {
      choice[s] = v;
      self(self, s + 1);
      choice[s] = -1;
    }
  };
  recurse(recurse, 0);
  return best;
}

// Direct oracle for clustered toys: all-or-nothing sets.
inline double cop_oracle(const ToySource& toy) {
  const cops::exact::HeldKarp hk = toy_costs(toy);
  double best = 0.0;
  const std::size_t n_sets = toy.sets.size();
  for (std::size_t bits = 0; bits < (1ull << n_sets); ++bits) {
    std::uint32_t mask = 1u;
    double reward = 0.0;
    for (std::size_t s = 0; s < n_sets; ++s) {
      if (!(bits & (1ull << s))) continue;
      reward += toy.set_rewards[s];
      for (int v : toy.sets[s]) mask |= 1u << v;
    }
    if (reward <= best) continue;
    if (hk.tour_cost(mask) <= toy.tmax + 1e-9) best = reward;
  }
  return best;
}

// Small random instance for solver cross-checks; resamples the seed until the
// vertex budget fits.
inline cops::Instance small_random_instance(std::uint64_t seed, int max_vertices,
                                            double budget_factor,
                                            bool circular = true) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    cops::io::GeneratorConfig cfg;
    cops::Rng mix(seed + attempt * 7919);
    cfg.n_clusters = 2 + static_cast<int>(mix.next_below(4));  // 2..5
    if (!circular) cfg.n_clusters = std::max(cfg.n_clusters, 2);
    cfg.subgroups_per_cluster_min = 1;
    cfg.subgroups_per_cluster_max = 3;
    cfg.vertices_per_subgroup_min = 1;
    cfg.vertices_per_subgroup_max = 2;
    cfg.box_min = 0.0;
    cfg.box_max = 60.0;
    cfg.reward_min = 1.0;
    cfg.reward_max = 9.0;
    cfg.budget_factor = budget_factor;
    cfg.circular = circular;
    cfg.seed = seed + attempt * 7919;
    cops::Instance in = cops::io::generate(cfg);
    if (in.num_vertices <= max_vertices) return in;
  }
}

}  // namespace test_support

#endif  // COPS_TESTS_TEST_SUPPORT_HPP_
