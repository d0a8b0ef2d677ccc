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

#ifndef COPS_ADAPTERS_HPP_
#define COPS_ADAPTERS_HPP_

#include <string>

#include "cops/instance.hpp"

namespace cops::io {

struct AdaptOptions {
  // Strict mode rejects unknown keywords/sections; lenient mode skips them.
  bool strict = false;
  // When non-negative, replaces the TMAX value of the source file (and makes
  // TMAX optional).
  double budget_override = -1.0;
};

// Reduces a set-orienteering source (TSPLIB-style NODE_COORD_SECTION with an
// optional per-vertex reward column, SET_SECTION lines
// "<set-id> <vertex-id>... -1", TMAX, DEPOT) to a COPS instance: one singleton
// subgroup per vertex carrying that vertex's reward, one cluster per set, and
// the depot's set as start/end cluster.
Instance adapt_sop(const std::string& text, const AdaptOptions& options = {});

// Reduces a clustered-orienteering source (SET_SECTION lines
// "<set-id> <reward> <vertex-id>... -1") to a COPS instance: one subgroup per
// set holding all of its vertices and the set reward, wrapped in its own
// cluster.
Instance adapt_cop(const std::string& text, const AdaptOptions& options = {});

}  // namespace cops::io

#endif  // COPS_ADAPTERS_HPP_
