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

#ifndef COPS_EXACT_HPP_
#define COPS_EXACT_HPP_

#include <optional>
#include <stdexcept>

#include "cops/evaluate.hpp"
#include "cops/instance.hpp"

namespace cops::exact {

// Raised when an instance exceeds the desk-scale vertex limit.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultVertexLimit = 20;

// Provably optimal solver for desk-scale instances: enumerates every
// assignment of at most one subgroup per client cluster and prices each one
// with a shared Held-Karp table (closed tour for circular instances, best
// path into the end cluster otherwise). Ties break by minimum cost, then by
// the lexicographically smallest selected-subgroup set.
//
// Returns std::nullopt when no feasible route exists (only possible for
// non-circular instances whose budget cannot reach the end cluster). Throws
// SizeLimitError when the distinct selectable vertices exceed vertex_limit.
std::optional<Solution> solve_exact(const Instance& instance,
                                    int vertex_limit = kDefaultVertexLimit);

}  // namespace cops::exact

#endif  // COPS_EXACT_HPP_
