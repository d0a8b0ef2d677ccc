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

#include "cops/held_karp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cops::exact {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTieTol = 1e-9;
}  // namespace

HeldKarp::HeldKarp(std::vector<double> dist, int k) : k_(k), dist_(std::move(dist)) {
  if (k < 1 || k > 25) throw std::invalid_argument("held-karp size out of range");
  if (dist_.size() != static_cast<std::size_t>(k) * k)
    throw std::invalid_argument("distance matrix size mismatch");

  dp_.assign((static_cast<std::size_t>(1) << k) * k, kInf);
  at(1u, 0) = 0.0;
  const std::uint32_t all = (k >= 32) ? ~0u : ((1u << k) - 1u);
  for (std::uint32_t mask = 1; mask <= all; mask += 2) {  // bit 0 always set
    for (int last = 0; last < k_; ++last) {
      if (!(mask & (1u << last))) continue;
      const double base = at(mask, last);
      if (base == kInf) continue;
      for (int next = 1; next < k_; ++next) {
        if (mask & (1u << next)) continue;
        const std::uint32_t grown = mask | (1u << next);
        const double cand = base + d(last, next);
        if (cand < at(grown, next)) at(grown, next) = cand;
      }
    }
  }
}

double HeldKarp::path_cost(std::uint32_t mask, int last) const {
  if (!(mask & 1u) || last < 0 || last >= k_ || !(mask & (1u << last)))
    throw std::invalid_argument("bad held-karp query");
  return at(mask, last);
}

double HeldKarp::best_path_cost(std::uint32_t mask, int* best_last) const {
  if (!(mask & 1u)) throw std::invalid_argument("bad held-karp query");
  double best = kInf;
  int arg = -1;
  for (int last = 0; last < k_; ++last) {
    if (!(mask & (1u << last))) continue;
    if (mask != 1u && last == 0) continue;  // paths of 2+ nodes end elsewhere
    const double c = at(mask, last);
    if (c < best - kTieTol) {
      best = c;
      arg = last;
    }
  }
  if (best_last) *best_last = arg;
  return best;
}

double HeldKarp::tour_cost(std::uint32_t mask) const {
  if (!(mask & 1u)) throw std::invalid_argument("bad held-karp query");
  if (mask == 1u) return 0.0;
  double best = kInf;
  for (int last = 1; last < k_; ++last) {
    if (!(mask & (1u << last))) continue;
    const double c = at(mask, last);
    if (c == kInf) continue;
    best = std::min(best, c + d(last, 0));
  }
  return best;
}

std::vector<int> HeldKarp::reconstruct_path(std::uint32_t mask, int last) const {
  const double total = path_cost(mask, last);
  if (total == kInf) throw std::invalid_argument("unreachable held-karp state");

  std::vector<int> reversed;
  std::uint32_t m = mask;
  int cur = last;
  while (m != 1u) {
    reversed.push_back(cur);
    const std::uint32_t prev_mask = m & ~(1u << cur);
    int pred = -1;
    for (int p = 0; p < k_; ++p) {
      if (!(prev_mask & (1u << p))) continue;
      if (prev_mask == 1u && p != 0) continue;
      if (std::abs(at(prev_mask, p) + d(p, cur) - at(m, cur)) <= kTieTol) {
        pred = p;
        break;  // smallest predecessor wins ties
      }
    }
    if (pred < 0) throw std::logic_error("held-karp backtrack failed");
    m = prev_mask;
    cur = pred;
  }
  reversed.push_back(0);
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

}  // namespace cops::exact
