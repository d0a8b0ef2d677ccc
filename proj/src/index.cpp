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

#include "cops/index.hpp"

#include <algorithm>

namespace cops {

InstanceIndex::InstanceIndex(const Instance& in) : instance(&in) {
  const int n = in.num_vertices;
  const int k = static_cast<int>(in.subgroups.size());

  clusters_of_subgroup.assign(k, {});
  for (const Cluster& cl : in.clusters)
    for (int s : cl.subgroup_ids) clusters_of_subgroup[s].push_back(cl.id);
  for (auto& v : clusters_of_subgroup) std::sort(v.begin(), v.end());

  subgroups_of_vertex.assign(n, {});
  for (const Subgroup& sg : in.subgroups)
    for (int v : sg.vertex_ids) subgroups_of_vertex[v].push_back(sg.id);
  for (auto& v : subgroups_of_vertex) std::sort(v.begin(), v.end());

  start_subgroup = in.clusters[in.start_cluster_id].subgroup_ids.front();
  start_vertex = in.subgroups[start_subgroup].vertex_ids.front();

  end_subgroups = in.clusters[in.end_cluster_id].subgroup_ids;
  std::sort(end_subgroups.begin(), end_subgroups.end());
  for (int s : end_subgroups)
    for (int v : in.subgroups[s].vertex_ids) end_vertices.push_back(v);
  std::sort(end_vertices.begin(), end_vertices.end());
  end_vertices.erase(std::unique(end_vertices.begin(), end_vertices.end()),
                     end_vertices.end());

  // A vertex touching any subgroup of the start or end cluster is not a
  // client; a subgroup is a client only when all of its vertices are.
  vertex_is_client.assign(n, true);
  for (int cl : {in.start_cluster_id, in.end_cluster_id})
    for (int s : in.clusters[cl].subgroup_ids)
      for (int v : in.subgroups[s].vertex_ids) vertex_is_client[v] = false;

  subgroup_is_client.assign(k, false);
  for (int s = 0; s < k; ++s) {
    bool all_client = true;
    for (int v : in.subgroups[s].vertex_ids)
      all_client = all_client && vertex_is_client[v];
    subgroup_is_client[s] = all_client;
    if (all_client) client_subgroups.push_back(s);
  }

  for (const Cluster& cl : in.clusters)
    if (cl.id != in.start_cluster_id && cl.id != in.end_cluster_id)
      client_clusters.push_back(cl.id);
}

bool InstanceIndex::is_end_vertex(int v) const {
  return std::binary_search(end_vertices.begin(), end_vertices.end(), v);
}

}  // namespace cops
