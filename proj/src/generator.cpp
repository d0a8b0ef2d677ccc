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

#include "cops/generator.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "cops/evaluate.hpp"
#include "cops/rng.hpp"

namespace cops::io {
namespace {

// Rounds to 9 significant digits, matching the canonical text form, so that
// written instances parse back bit-identical.
double quantize(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return std::strtod(buf, nullptr);
}

void check(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("generator config: ") + what);
}

double nn_tour_estimate(const Instance& in, bool circular) {
  const int n = in.num_vertices;
  std::vector<bool> used(n, false);
  int at = 0;
  used[0] = true;
  double total = 0.0;
  for (int step = 1; step < n; ++step) {
    int best = -1;
    double best_d = 0.0;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      const double d = edge_cost(in, at, v);
      if (best < 0 || d < best_d) {
        best = v;
        best_d = d;
      }
    }
    used[best] = true;
    total += best_d;
    at = best;
  }
  if (circular && n > 1) total += edge_cost(in, at, 0);
  return total;
}

}  // namespace

Instance generate(const GeneratorConfig& cfg) {
  check(cfg.n_clusters >= 1, "need at least one cluster");
  check(cfg.circular || cfg.n_clusters >= 2,
        "a non-circular instance needs a separate end cluster");
  check(cfg.subgroups_per_cluster_min >= 1 &&
            cfg.subgroups_per_cluster_min <= cfg.subgroups_per_cluster_max,
        "empty subgroups-per-cluster range");
  check(cfg.vertices_per_subgroup_min >= 1 &&
            cfg.vertices_per_subgroup_min <= cfg.vertices_per_subgroup_max,
        "empty vertices-per-subgroup range");
  check(cfg.box_min < cfg.box_max, "empty coordinate box");
  check(cfg.reward_min >= 0.0 && cfg.reward_min <= cfg.reward_max,
        "empty reward range");
  check(cfg.budget_factor > 0.0 && cfg.budget_factor <= 1.0,
        "budget factor must be in (0, 1]");

  Rng rng(cfg.seed);
  auto coordinate = [&rng, &cfg]() {
    return quantize(rng.next_in(cfg.box_min, cfg.box_max));
  };

  Instance in;
  in.name = "gen-" + std::to_string(cfg.seed);
  in.metric = Metric::kEuclidean;

  // Start depot: a single-vertex, zero-reward subgroup in its own cluster.
  in.coords.push_back({coordinate(), coordinate()});
  in.subgroups.push_back({0, 0.0, {0}});
  in.clusters.push_back({0, {0}});
  in.start_cluster_id = 0;

  const int client_clusters = cfg.n_clusters - (cfg.circular ? 1 : 2);
  for (int c = 0; c < client_clusters; ++c) {
    Cluster cl;
    cl.id = static_cast<int>(in.clusters.size());
    const int n_sub = rng.next_int(cfg.subgroups_per_cluster_min,
                                   cfg.subgroups_per_cluster_max);
    for (int s = 0; s < n_sub; ++s) {
      Subgroup sg;
      sg.id = static_cast<int>(in.subgroups.size());
      const int n_vert = rng.next_int(cfg.vertices_per_subgroup_min,
                                      cfg.vertices_per_subgroup_max);
      for (int v = 0; v < n_vert; ++v) {
        sg.vertex_ids.push_back(static_cast<int>(in.coords.size()));
        in.coords.push_back({coordinate(), coordinate()});
      }
      sg.reward = quantize(rng.next_in(cfg.reward_min, cfg.reward_max));
      cl.subgroup_ids.push_back(sg.id);
      in.subgroups.push_back(std::move(sg));
    }
    in.clusters.push_back(std::move(cl));
  }

  if (cfg.circular) {
    in.end_cluster_id = in.start_cluster_id;
  } else {
    // Two candidate endpoints, zero reward each.
    Cluster end;
    end.id = static_cast<int>(in.clusters.size());
    for (int e = 0; e < 2; ++e) {
      Subgroup sg;
      sg.id = static_cast<int>(in.subgroups.size());
      sg.vertex_ids.push_back(static_cast<int>(in.coords.size()));
      in.coords.push_back({coordinate(), coordinate()});
      end.subgroup_ids.push_back(sg.id);
      in.subgroups.push_back(std::move(sg));
    }
    in.end_cluster_id = end.id;
    in.clusters.push_back(std::move(end));
  }

  in.num_vertices = static_cast<int>(in.coords.size());
  in.budget = quantize(cfg.budget_factor * nn_tour_estimate(in, cfg.circular));
  require_valid(in);
  return in;
}

}  // namespace cops::io
