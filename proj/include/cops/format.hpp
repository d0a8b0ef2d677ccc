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

#ifndef COPS_FORMAT_HPP_
#define COPS_FORMAT_HPP_

#include <stdexcept>
#include <string>

#include "cops/instance.hpp"

namespace cops::io {

// Raised on malformed input. Syntax problems carry a 1-based line number in
// the message; semantic problems name the offending entity.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses a cops-1 document (see README for the grammar). The returned
// instance satisfies every structural invariant.
Instance parse_cops(const std::string& text);

// Writes the canonical cops-1 form: fixed field order, lines sorted by id,
// reals printed with 9 significant digits. Refuses structurally invalid
// instances with std::invalid_argument.
std::string write_cops(const Instance& instance);

}  // namespace cops::io

#endif  // COPS_FORMAT_HPP_
