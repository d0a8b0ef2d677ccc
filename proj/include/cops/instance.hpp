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

#ifndef COPS_INSTANCE_HPP_
#define COPS_INSTANCE_HPP_

#include <string>
#include <vector>

namespace cops {

enum class Metric { kEuclidean, kExplicitMatrix };

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

// A set of vertices that is rewarded only when every one of its vertices is
// visited. The vertex order is meaningful: heuristics insert vertices in
// declaration order.
struct Subgroup {
  int id = 0;
  double reward = 0.0;
  std::vector<int> vertex_ids;
  bool operator==(const Subgroup&) const = default;
};

// A set of alternative subgroups; at most one of them may be served.
struct Cluster {
  int id = 0;
  std::vector<int> subgroup_ids;
  bool operator==(const Cluster&) const = default;
};

// Problem definition. Instances are treated as immutable once built and are
// safe to share between threads. All ids are dense 0-based indexes: vertex v
// is coords[v] (Euclidean) or row/column v of the cost matrix, subgroup s is
// subgroups[s], cluster c is clusters[c].
struct Instance {
  std::string name;
  Metric metric = Metric::kEuclidean;
  int num_vertices = 0;
  std::vector<Point> coords;    // size num_vertices when Euclidean
  std::vector<double> matrix;   // row-major n*n when ExplicitMatrix
  std::vector<Subgroup> subgroups;
  std::vector<Cluster> clusters;
  int start_cluster_id = 0;
  int end_cluster_id = 0;
  double budget = 0.0;
  // When set, Euclidean edge costs are rounded to the nearest integer
  // (benchmark-parity mode).
  bool round_costs = false;

  bool is_circular() const { return start_cluster_id == end_cluster_id; }
  bool operator==(const Instance&) const = default;
};

// Returns every structural problem found, one message per problem. An empty
// result means the instance satisfies all invariants (dense ids, single-vertex
// start subgroup, symmetric non-negative costs, no dangling references, ...).
std::vector<std::string> instance_errors(const Instance& instance);

// Throws std::invalid_argument with the first problem when the instance is
// structurally invalid.
void require_valid(const Instance& instance);

}  // namespace cops

#endif  // COPS_INSTANCE_HPP_
