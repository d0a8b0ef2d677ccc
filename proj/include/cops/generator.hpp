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

#ifndef COPS_GENERATOR_HPP_
#define COPS_GENERATOR_HPP_

#include <cstdint>

#include "cops/instance.hpp"

namespace cops::io {

// Seeded random-instance generator. Identical config and seed produce a
// byte-identical instance (all reals are quantized to 9 significant digits so
// the canonical text form round-trips losslessly).
struct GeneratorConfig {
  // Total cluster count including the start cluster (and the end cluster when
  // non-circular); must leave room for both.
  int n_clusters = 3;
  int subgroups_per_cluster_min = 1;
  int subgroups_per_cluster_max = 2;
  int vertices_per_subgroup_min = 1;
  int vertices_per_subgroup_max = 2;
  double box_min = 0.0;
  double box_max = 100.0;
  double reward_min = 1.0;
  double reward_max = 10.0;
  // Budget = budget_factor * greedy nearest-neighbour tour estimate over all
  // vertices. Must lie in (0, 1].
  double budget_factor = 1.0;
  bool circular = true;
  std::uint64_t seed = 1;
};

// Throws std::invalid_argument on empty/invalid ranges.
Instance generate(const GeneratorConfig& config);

}  // namespace cops::io

#endif  // COPS_GENERATOR_HPP_
