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

#ifndef COPS_RENDER_HPP_
#define COPS_RENDER_HPP_

#include <string>

#include "cops/evaluate.hpp"
#include "cops/instance.hpp"

namespace cops {

// Draws a Euclidean instance and a route as SVG: one circle per vertex
// (colored by cluster), a shaded hull per selected subgroup, and the route as
// a polyline. Output is byte-deterministic. Explicit-matrix instances have no
// coordinates and are refused with std::invalid_argument.
std::string render_route_svg(const Instance& instance,
                             const Solution& solution);

}  // namespace cops

#endif  // COPS_RENDER_HPP_
