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

#include "cops/format.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace cops::io {
namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Sequential reader over content lines: comments ('#' to end of line) and
// blank lines are invisible.
class LineReader {
 public:
  explicit LineReader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (!line.empty()) lines_.push_back({number, line});
    }
  }

  bool done() const { return pos_ >= lines_.size(); }
  int line_number() const {
    return done() ? (lines_.empty() ? 0 : lines_.back().first) : lines_[pos_].first;
  }
  const std::string& peek() const { return lines_[pos_].second; }
  std::string take() { return lines_[pos_++].second; }

 private:
  std::vector<std::pair<int, std::string>> lines_;
  std::size_t pos_ = 0;
};

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

double parse_real(const std::string& token, int line, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size() || !std::isfinite(v))
      fail(line, std::string("bad ") + what + " '" + token + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    fail(line, std::string("bad ") + what + " '" + token + "'");
  }
}

int parse_int(const std::string& token, int line, const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(token, &used);
    if (used != token.size()) fail(line, std::string("bad ") + what + " '" + token + "'");
    return static_cast<int>(v);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    fail(line, std::string("bad ") + what + " '" + token + "'");
  }
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

// 9 significant digits: enough to round-trip every value the toolkit writes.
std::string real_str(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

Instance parse_cops(const std::string& text) {
  LineReader reader(text);
  Instance in;

  bool have_name = false, have_budget = false, have_metric = false;
  bool have_start = false, have_end = false;

  // Header keys may appear in any order; the VERTICES section starts the
  // fixed-order data part.
  while (true) {
    if (reader.done()) fail(reader.line_number(), "missing VERTICES section");
    const int line = reader.line_number();
    const std::string raw = reader.take();
    std::istringstream ls(raw);
    std::string key;
    ls >> key;
    if (key == "NAME") {
      std::string rest;
      std::getline(ls, rest);
      in.name = trim(rest);
      if (in.name.empty()) fail(line, "NAME needs a value");
      have_name = true;
    } else if (key == "BUDGET") {
      std::string v;
      if (!(ls >> v)) fail(line, "BUDGET needs a value");
      in.budget = parse_real(v, line, "budget");
      have_budget = true;
    } else if (key == "METRIC") {
      std::string v;
      if (!(ls >> v)) fail(line, "METRIC needs a value");
      if (v == "EUCLIDEAN") in.metric = Metric::kEuclidean;
      else if (v == "MATRIX") in.metric = Metric::kExplicitMatrix;
      else fail(line, "unknown metric '" + v + "'");
      have_metric = true;
    } else if (key == "ROUND_COSTS") {
      std::string v;
      if (!(ls >> v) || v != "NEAREST")
        fail(line, "ROUND_COSTS supports only NEAREST");
      in.round_costs = true;
    } else if (key == "START_CLUSTER") {
      std::string v;
      if (!(ls >> v)) fail(line, "START_CLUSTER needs a value");
      in.start_cluster_id = parse_int(v, line, "cluster id");
      have_start = true;
    } else if (key == "END_CLUSTER") {
      std::string v;
      if (!(ls >> v)) fail(line, "END_CLUSTER needs a value");
      in.end_cluster_id = parse_int(v, line, "cluster id");
      have_end = true;
    } else if (key == "VERTICES") {
      std::string v;
      if (!(ls >> v)) fail(line, "VERTICES needs a count");
      in.num_vertices = parse_int(v, line, "vertex count");
      break;
    } else {
      fail(line, "unknown keyword '" + key + "'");
    }
  }

  if (!have_name) throw ParseError("missing NAME");
  if (!have_budget) throw ParseError("missing BUDGET");
  if (!have_metric) throw ParseError("missing METRIC");
  if (!have_start) throw ParseError("missing START_CLUSTER");
  if (!have_end) throw ParseError("missing END_CLUSTER");
  if (in.num_vertices <= 0)
    throw ParseError("vertex count must be positive");

  const int n = in.num_vertices;
  if (in.metric == Metric::kEuclidean) {
    in.coords.assign(n, {});
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
      if (reader.done()) fail(reader.line_number(), "unexpected end of vertex lines");
      const int line = reader.line_number();
      const auto toks = tokens_of(reader.take());
      if (toks.size() != 3) fail(line, "vertex line needs '<id> <x> <y>'");
      const int id = parse_int(toks[0], line, "vertex id");
      if (id < 0 || id >= n) fail(line, "vertex id " + toks[0] + " out of range");
      if (seen[id]) fail(line, "duplicate vertex id " + toks[0]);
      seen[id] = true;
      in.coords[id] = {parse_real(toks[1], line, "coordinate"),
                       parse_real(toks[2], line, "coordinate")};
    }
  } else {
    if (reader.done() || reader.peek() != "MATRIX")
      fail(reader.line_number(), "explicit metric needs a MATRIX section");
    reader.take();
    in.matrix.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      if (reader.done()) fail(reader.line_number(), "unexpected end of matrix rows");
      const int line = reader.line_number();
      const auto toks = tokens_of(reader.take());
      if (static_cast<int>(toks.size()) != n)
        fail(line, "matrix row needs " + std::to_string(n) + " values");
      for (const auto& t : toks)
        in.matrix.push_back(parse_real(t, line, "matrix entry"));
    }
  }

  {
    if (reader.done()) fail(reader.line_number(), "missing SUBGROUPS section");
    const int line = reader.line_number();
    const auto toks = tokens_of(reader.take());
    if (toks.size() != 2 || toks[0] != "SUBGROUPS")
      fail(line, "expected 'SUBGROUPS <count>'");
    const int k = parse_int(toks[1], line, "subgroup count");
    if (k <= 0) fail(line, "subgroup count must be positive");
    in.subgroups.assign(k, {});
    std::vector<bool> seen(k, false);
    for (int i = 0; i < k; ++i) {
      if (reader.done()) fail(reader.line_number(), "unexpected end of subgroup lines");
      const int l = reader.line_number();
      const auto st = tokens_of(reader.take());
      if (st.size() < 3) fail(l, "subgroup line needs '<id> <reward> <vertex>...'");
      const int id = parse_int(st[0], l, "subgroup id");
      if (id < 0 || id >= k) fail(l, "subgroup id " + st[0] + " out of range");
      if (seen[id]) fail(l, "duplicate subgroup id " + st[0]);
      seen[id] = true;
      Subgroup& sg = in.subgroups[id];
      sg.id = id;
      sg.reward = parse_real(st[1], l, "reward");
      for (std::size_t t = 2; t < st.size(); ++t)
        sg.vertex_ids.push_back(parse_int(st[t], l, "vertex id"));
    }
  }

  {
    if (reader.done()) fail(reader.line_number(), "missing CLUSTERS section");
    const int line = reader.line_number();
    const auto toks = tokens_of(reader.take());
    if (toks.size() != 2 || toks[0] != "CLUSTERS")
      fail(line, "expected 'CLUSTERS <count>'");
    const int l = parse_int(toks[1], line, "cluster count");
    if (l <= 0) fail(line, "cluster count must be positive");
    in.clusters.assign(l, {});
    std::vector<bool> seen(l, false);
    for (int i = 0; i < l; ++i) {
      if (reader.done()) fail(reader.line_number(), "unexpected end of cluster lines");
      const int ln = reader.line_number();
      const auto ct = tokens_of(reader.take());
      if (ct.size() < 2) fail(ln, "cluster line needs '<id> <subgroup>...'");
      const int id = parse_int(ct[0], ln, "cluster id");
      if (id < 0 || id >= l) fail(ln, "cluster id " + ct[0] + " out of range");
      if (seen[id]) fail(ln, "duplicate cluster id " + ct[0]);
      seen[id] = true;
      Cluster& cl = in.clusters[id];
      cl.id = id;
      for (std::size_t t = 1; t < ct.size(); ++t)
        cl.subgroup_ids.push_back(parse_int(ct[t], ln, "subgroup id"));
    }
  }

  if (reader.done() || reader.take() != "EOF")
    fail(reader.line_number(), "missing EOF marker");
  if (!reader.done()) fail(reader.line_number(), "content after EOF");

  const auto errs = instance_errors(in);
  if (!errs.empty()) throw ParseError(errs.front());
  return in;
}

std::string write_cops(const Instance& in) {
  require_valid(in);
  std::ostringstream os;
  os << "NAME " << in.name << "\n";
  os << "BUDGET " << real_str(in.budget) << "\n";
  os << "METRIC "
     << (in.metric == Metric::kEuclidean ? "EUCLIDEAN" : "MATRIX") << "\n";
  if (in.round_costs) os << "ROUND_COSTS NEAREST\n";
  os << "START_CLUSTER " << in.start_cluster_id << "\n";
  os << "END_CLUSTER " << in.end_cluster_id << "\n";
  os << "VERTICES " << in.num_vertices << "\n";
  if (in.metric == Metric::kEuclidean) {
    for (int v = 0; v < in.num_vertices; ++v)
      os << v << " " << real_str(in.coords[v].x) << " "
         << real_str(in.coords[v].y) << "\n";
  } else {
    os << "MATRIX\n";
    for (int i = 0; i < in.num_vertices; ++i) {
      for (int j = 0; j < in.num_vertices; ++j) {
        if (j) os << " ";
        os << real_str(in.matrix[static_cast<std::size_t>(i) * in.num_vertices + j]);
      }
      os << "\n";
    }
  }
  os << "SUBGROUPS " << in.subgroups.size() << "\n";
  for (const Subgroup& sg : in.subgroups) {
    os << sg.id << " " << real_str(sg.reward);
    for (int v : sg.vertex_ids) os << " " << v;
    os << "\n";
  }
  os << "CLUSTERS " << in.clusters.size() << "\n";
  for (const Cluster& cl : in.clusters) {
    os << cl.id;
    for (int s : cl.subgroup_ids) os << " " << s;
    os << "\n";
  }
  os << "EOF\n";
  return os.str();
}

}  // namespace cops::io
