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

#include "cops/instance.hpp"

#include <cmath>
#include <cstddef>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cops {
namespace {

constexpr double kMatrixTol = 1e-9;

std::string entity(const char* what, int id) {
  std::ostringstream os;
  os << what << " " << id;
  return os.str();
}

}  // namespace

std::vector<std::string> instance_errors(const Instance& in) {
  std::vector<std::string> errs;
  const int n = in.num_vertices;
  if (n <= 0) {
    errs.push_back("instance has no vertices");
    return errs;
  }

  if (in.metric == Metric::kEuclidean) {
    if (static_cast<int>(in.coords.size()) != n)
      errs.push_back("coordinate count does not match the vertex count");
  } else {
    if (in.matrix.size() != static_cast<std::size_t>(n) * n) {
      errs.push_back("cost matrix is not " + std::to_string(n) + "x" +
                     std::to_string(n));
    } else {
      for (int i = 0; i < n && errs.size() < 8; ++i) {
        if (std::abs(in.matrix[static_cast<std::size_t>(i) * n + i]) > kMatrixTol)
          errs.push_back("cost matrix has non-zero diagonal at " +
                         entity("vertex", i));
        for (int j = i + 1; j < n && errs.size() < 8; ++j) {
          const double a = in.matrix[static_cast<std::size_t>(i) * n + j];
          const double b = in.matrix[static_cast<std::size_t>(j) * n + i];
          if (a < 0.0 || b < 0.0)
            errs.push_back("negative cost between " + entity("vertex", i) +
                           " and " + entity("vertex", j));
          if (std::abs(a - b) > kMatrixTol)
            errs.push_back("asymmetric cost between " + entity("vertex", i) +
                           " and " + entity("vertex", j));
        }
      }
    }
  }

  if (!(in.budget >= 0.0)) errs.push_back("budget must be non-negative");

  const int k = static_cast<int>(in.subgroups.size());
  const int l = static_cast<int>(in.clusters.size());
  if (k == 0) errs.push_back("instance has no subgroups");
  if (l == 0) errs.push_back("instance has no clusters");

  std::vector<bool> vertex_covered(n, false);
  for (int s = 0; s < k; ++s) {
    const Subgroup& sg = in.subgroups[s];
    if (sg.id != s)
      errs.push_back(entity("subgroup", s) + " carries id " +
                     std::to_string(sg.id) + " (ids must be dense)");
    if (!(sg.reward >= 0.0))
      errs.push_back(entity("subgroup", s) + " has a negative reward");
    if (sg.vertex_ids.empty())
      errs.push_back(entity("subgroup", s) + " has no vertices");
    std::set<int> seen;
    for (int v : sg.vertex_ids) {
      if (v < 0 || v >= n) {
        errs.push_back(entity("subgroup", s) + " references unknown " +
                       entity("vertex", v));
        continue;
      }
      if (!seen.insert(v).second)
        errs.push_back(entity("subgroup", s) + " lists " + entity("vertex", v) +
                       " twice");
      vertex_covered[v] = true;
    }
  }
  for (int v = 0; v < n; ++v)
    if (!vertex_covered[v])
      errs.push_back(entity("vertex", v) + " belongs to no subgroup");

  std::vector<bool> subgroup_covered(k, false);
  for (int c = 0; c < l; ++c) {
    const Cluster& cl = in.clusters[c];
    if (cl.id != c)
      errs.push_back(entity("cluster", c) + " carries id " +
                     std::to_string(cl.id) + " (ids must be dense)");
    if (cl.subgroup_ids.empty())
      errs.push_back(entity("cluster", c) + " has no subgroups");
    std::set<int> seen;
    for (int s : cl.subgroup_ids) {
      if (s < 0 || s >= k) {
        errs.push_back(entity("cluster", c) + " references unknown " +
                       entity("subgroup", s));
        continue;
      }
      if (!seen.insert(s).second)
        errs.push_back(entity("cluster", c) + " lists " + entity("subgroup", s) +
                       " twice");
      subgroup_covered[s] = true;
    }
  }
  for (int s = 0; s < k; ++s)
    if (!subgroup_covered[s])
      errs.push_back(entity("subgroup", s) + " belongs to no cluster");

  if (in.start_cluster_id < 0 || in.start_cluster_id >= l) {
    errs.push_back("start cluster id " + std::to_string(in.start_cluster_id) +
                   " is out of range");
    return errs;
  }
  if (in.end_cluster_id < 0 || in.end_cluster_id >= l) {
    errs.push_back("end cluster id " + std::to_string(in.end_cluster_id) +
                   " is out of range");
    return errs;
  }

  const Cluster& start = in.clusters[in.start_cluster_id];
  if (start.subgroup_ids.size() != 1) {
    errs.push_back("start " + entity("cluster", start.id) +
                   " must contain exactly one subgroup");
  } else {
    const int s = start.subgroup_ids.front();
    if (s >= 0 && s < k && in.subgroups[s].vertex_ids.size() != 1)
      errs.push_back("start " + entity("subgroup", s) +
                     " must contain exactly one vertex");
  }

  if (!in.is_circular()) {
    for (int s : in.clusters[in.end_cluster_id].subgroup_ids) {
      if (s >= 0 && s < k && in.subgroups[s].vertex_ids.size() != 1)
        errs.push_back("end " + entity("subgroup", s) +
                       " must contain exactly one vertex");
    }
  }

  return errs;
}

void require_valid(const Instance& instance) {
  const auto errs = instance_errors(instance);
  if (errs.empty()) return;
  std::ostringstream os;
  os << "invalid instance";
  if (!instance.name.empty()) os << " '" << instance.name << "'";
  os << ": " << errs.front();
  if (errs.size() > 1) os << " (+" << errs.size() - 1 << " more)";
  throw std::invalid_argument(os.str());
}

}  // namespace cops
