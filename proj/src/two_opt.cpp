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

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "cops/evaluate.hpp"
#include "cops/tabu.hpp"

namespace cops::tabu {

namespace {
constexpr double kGainTol = 1e-9;
}

std::vector<int> two_opt(const Instance& in, std::vector<int> route,
                         bool circular) {
  if (route.empty()) throw std::invalid_argument("route is empty");
  const int len = static_cast<int>(route.size());
  if (len < 4) return route;

  // Position 0 is pinned; for paths the last position is pinned as well.
  const int last_rev = circular ? len - 1 : len - 2;

  bool improved = true;
  while (improved) {
    improved = false;
    double best_gain = kGainTol;
    int best_i = -1, best_j = -1;
    for (int i = 1; i < last_rev; ++i) {
      const double d_prev = edge_cost(in, route[i - 1], route[i]);
      for (int j = i + 1; j <= last_rev; ++j) {
        const int next = (j + 1 < len) ? route[j + 1] : route[0];
        const double removed = d_prev + edge_cost(in, route[j], next);
        const double added = edge_cost(in, route[i - 1], route[j]) +
                             edge_cost(in, route[i], next);
        const double gain = removed - added;
        if (gain > best_gain) {
          best_gain = gain;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_i >= 0) {
      std::reverse(route.begin() + best_i, route.begin() + best_j + 1);
      improved = true;
    }
  }
  return route;
}

}  // namespace cops::tabu
