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

#ifndef COPS_EVALUATE_HPP_
#define COPS_EVALUATE_HPP_

#include <span>
#include <string>
#include <vector>

#include "cops/instance.hpp"

namespace cops {

// Absolute tolerance used by all budget and cost-consistency checks.
inline constexpr double kFeasibilityTol = 1e-9;

struct Solution {
  std::vector<int> route;               // route[0] is the start vertex
  std::vector<int> selected_subgroups;  // sorted, unique
  double cost = 0.0;
  double reward = 0.0;
  bool operator==(const Solution&) const = default;
};

enum class ViolationKind {
  kUnknownVertex,
  kUnknownSubgroup,
  kStartVertex,
  kEndCluster,
  kSubgroupCoverage,
  kClusterConflict,
  kBudget,
  kCostMismatch,
  kRewardMismatch,
};

struct Violation {
  ViolationKind kind;
  int entity;  // offending vertex/subgroup/cluster id, -1 when global
  std::string message;
};

const char* violation_kind_name(ViolationKind kind);

// Symmetric edge cost between two vertices. Euclidean instances use the exact
// double-precision distance (rounded to the nearest integer when the instance
// asks for rounded costs); explicit instances read the matrix.
double edge_cost(const Instance& instance, int u, int v);

// Sum of consecutive edge costs; a circular route also pays the closing edge
// back to route[0].
double route_cost(const Instance& instance, std::span<const int> route,
                  bool circular);

// Builds a Solution with recomputed cost and reward. Constraint violations do
// not fail here; pair with validate(). Unknown ids throw.
Solution evaluate(const Instance& instance, std::vector<int> route,
                  std::vector<int> selected_subgroups);

// Returns every violated solution constraint. Empty means feasible.
std::vector<Violation> validate(const Instance& instance,
                                const Solution& solution);

// Sum over clusters of the maximum subgroup reward in the cluster: an upper
// bound on the reward of any feasible solution.
double reward_upper_bound(const Instance& instance);

}  // namespace cops

#endif  // COPS_EVALUATE_HPP_
