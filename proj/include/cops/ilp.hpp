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

#ifndef COPS_ILP_HPP_
#define COPS_ILP_HPP_

#include <span>
#include <string>
#include <vector>

#include "cops/evaluate.hpp"
#include "cops/instance.hpp"

namespace cops::exact {

// Complete-graph edge indexing: edges are the pairs (u, v) with u < v in
// lexicographic order.
int edge_count(int n);
int edge_index(int n, int u, int v);
std::pair<int, int> edge_vertices(int n, int index);

enum class VarKind { kEdgeX, kVertexY, kSubgroupZ, kClusterW };

struct IlpVar {
  VarKind kind;
  int a = 0;  // edge endpoint u / vertex / subgroup / cluster id
  int b = 0;  // edge endpoint v, unused otherwise
  std::string name;
};

struct LinearTerm {
  double coef;
  int var;  // index into IlpModel::vars
};

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

struct LinearConstraint {
  std::string name;
  std::vector<LinearTerm> terms;
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
};

// All variables are binary. Variable order is fixed: edge x variables in
// lexicographic order, then y per vertex, z per subgroup, w per cluster.
struct IlpModel {
  std::vector<IlpVar> vars;
  std::vector<LinearTerm> objective;  // maximized
  std::vector<LinearConstraint> rows;

  int x_offset = 0, y_offset = 0, z_offset = 0, w_offset = 0;
  int num_vertices = 0;
};

struct SubtourMode {
  enum Kind { kNone, kAllUpTo, kLazy } kind = kNone;
  int k = 0;  // subset size cap for kAllUpTo

  static SubtourMode None() { return {kNone, 0}; }
  static SubtourMode AllUpTo(int k) { return {kAllUpTo, k}; }
  static SubtourMode Lazy() { return {kLazy, 0}; }
};

// Builds the integer model: the reward-maximizing objective over subgroup
// variables, the start/degree/budget/linking/cluster-choice/visit-efficiency
// rows, the non-circular endpoint rows when applicable, and subtour rows per
// mode (kAllUpTo instantiates one row per client subset up to size k; kLazy
// leaves them to separate_subtours).
IlpModel build_ilp(const Instance& instance, const SubtourMode& mode);

// Standard LP-format text (Maximize / Subject To / Binary / End) with
// deterministic ordering and naming.
std::string export_lp(const IlpModel& model);

// One LP-format constraint line (used to append cut rows to a model file).
std::string lp_row(const IlpModel& model, const LinearConstraint& row);

// Row names violated by a dense variable assignment (values indexed like
// IlpModel::vars).
std::vector<std::string> violated_rows(const IlpModel& model,
                                       std::span<const double> values,
                                       double tol = 1e-6);

// Maps a solution onto model variables: x counts route edge traversals (the
// degenerate two-vertex circular route yields x = 2 on its single edge),
// y marks visited vertices, z the selected subgroups, w the served clusters.
std::vector<double> induced_assignment(const Instance& instance,
                                       const IlpModel& model,
                                       const Solution& solution);

// Finds the connected components of the support graph of an integral edge
// assignment and emits one subtour row per component of visited client
// vertices that is separated from the start vertex. Empty result means the
// support graph is a single connected route. Throws std::invalid_argument on
// fractional input.
std::vector<LinearConstraint> separate_subtours(const Instance& instance,
                                                std::span<const double> x_values,
                                                std::span<const double> y_values);

}  // namespace cops::exact

#endif  // COPS_ILP_HPP_
