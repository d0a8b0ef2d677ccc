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

#ifndef COPS_HELD_KARP_HPP_
#define COPS_HELD_KARP_HPP_

#include <cstdint>
#include <vector>

namespace cops::exact {

// Dynamic program over vertex subsets of a dense k x k cost matrix
// (O(2^k k^2) time, O(2^k k) memory). Node 0 is the fixed route origin. The
// whole table is filled once, so minimum path costs for *every* subset
// containing node 0 come out of one construction.
class HeldKarp {
 public:
  // dist is row-major k*k. k must be in [1, 25].
  HeldKarp(std::vector<double> dist, int k);

  int size() const { return k_; }

  // Minimum cost of a path that starts at node 0, visits exactly the nodes of
  // `mask` (bit 0 must be set) and ends at `last` (in mask). Infinity when
  // unreachable.
  double path_cost(std::uint32_t mask, int last) const;

  // Minimum path cost over all admissible endpoints.
  double best_path_cost(std::uint32_t mask, int* best_last = nullptr) const;

  // Minimum closed-tour cost: best path plus the closing edge back to node 0.
  double tour_cost(std::uint32_t mask) const;

  // Vertex order (starting with node 0) realizing path_cost(mask, last).
  // Ties pick the smallest predecessor, so reconstruction is deterministic.
  std::vector<int> reconstruct_path(std::uint32_t mask, int last) const;

 private:
  double& at(std::uint32_t mask, int last) { return dp_[static_cast<std::size_t>(mask) * k_ + last]; }
  double at(std::uint32_t mask, int last) const { return dp_[static_cast<std::size_t>(mask) * k_ + last]; }
  double d(int a, int b) const { return dist_[static_cast<std::size_t>(a) * k_ + b]; }

  int k_;
  std::vector<double> dist_;
  std::vector<double> dp_;
};

}  // namespace cops::exact

#endif  // COPS_HELD_KARP_HPP_
