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

#ifndef COPS_INDEX_HPP_
#define COPS_INDEX_HPP_

#include <vector>

#include "cops/instance.hpp"

namespace cops {

// Derived lookup tables shared by the solvers and the validator. Built once
// per instance; the instance must outlive the index.
//
// A vertex is a "client" when it does not belong to any subgroup of the start
// or end cluster. A subgroup is a "client" when all of its vertices are
// clients; only client subgroups are moved by the heuristic.
struct InstanceIndex {
  explicit InstanceIndex(const Instance& instance);

  const Instance* instance;
  int start_subgroup = 0;
  int start_vertex = 0;
  std::vector<int> end_subgroups;  // subgroups of the end cluster, ascending
  std::vector<int> end_vertices;   // their vertices, deduplicated, ascending

  std::vector<std::vector<int>> clusters_of_subgroup;  // ascending cluster ids
  std::vector<std::vector<int>> subgroups_of_vertex;   // ascending subgroup ids
  std::vector<bool> vertex_is_client;
  std::vector<bool> subgroup_is_client;
  std::vector<int> client_subgroups;  // ascending
  std::vector<int> client_clusters;   // every cluster but start/end, ascending

  bool is_end_vertex(int v) const;
};

}  // namespace cops

#endif  // COPS_INDEX_HPP_
