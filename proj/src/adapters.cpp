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

#include "cops/adapters.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "cops/format.hpp"

namespace cops::io {
namespace {

struct SourceNode {
  int id = 0;
  double x = 0.0, y = 0.0;
  double reward = 0.0;  // optional 4th column
};

struct SourceSet {
  int id = 0;
  double reward = 0.0;  // COP sources only
  std::vector<int> vertex_ids;
};

struct Source {
  std::string name = "adapted";
  std::optional<double> tmax;
  std::optional<int> depot;
  std::optional<int> dimension;
  std::vector<SourceNode> nodes;
  std::vector<SourceSet> sets;
};

enum class SourceKind { kSop, kCop };

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

bool keyword_like(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
  }
  return false;
}

// Splits "KEY : value", "KEY: value" or "KEY value" into key and value.
std::pair<std::string, std::string> split_key(const std::string& line) {
  std::string key, rest;
  std::size_t i = 0;
  while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
         line[i] != ':')
    key += line[i++];
  while (i < line.size() && (std::isspace(static_cast<unsigned char>(line[i])) ||
                             line[i] == ':'))
    ++i;
  rest = line.substr(i);
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back())))
    rest.pop_back();
  return {key, rest};
}

double to_real(const std::string& t, int line, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size() || !std::isfinite(v))
      fail(line, std::string("bad ") + what + " '" + t + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    fail(line, std::string("bad ") + what + " '" + t + "'");
  }
}

int to_int(const std::string& t, int line, const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(t, &used);
    if (used != t.size()) fail(line, std::string("bad ") + what + " '" + t + "'");
    return static_cast<int>(v);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    fail(line, std::string("bad ") + what + " '" + t + "'");
  }
}

const char* const kKnownKeys[] = {"NAME",   "TYPE",           "COMMENT",
                                  "DIMENSION", "EDGE_WEIGHT_TYPE", "TMAX",
                                  "DEPOT",  "EOF"};

bool known_key(const std::string& key) {
  for (const char* k : kKnownKeys)
    if (key == k) return true;
  return false;
}

Source parse_source(const std::string& text, SourceKind kind,
                    const AdaptOptions& opt) {
  std::vector<std::pair<int, std::string>> lines;
  {
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      bool blank = true;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (!blank) lines.push_back({number, line});
    }
  }

  Source src;
  std::size_t pos = 0;
  while (pos < lines.size()) {
    const auto [line_no, raw] = lines[pos];
    if (!keyword_like(raw))
      fail(line_no, "data line outside any section");
    const auto [key, value] = split_key(raw);

    if (key == "NODE_COORD_SECTION") {
      ++pos;
      while (pos < lines.size() && !keyword_like(lines[pos].second)) {
        const auto [nl, nraw] = lines[pos];
        std::istringstream ls(nraw);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.size() != 3 && toks.size() != 4)
          fail(nl, "node line needs '<id> <x> <y> [reward]'");
        SourceNode node;
        node.id = to_int(toks[0], nl, "vertex id");
        node.x = to_real(toks[1], nl, "coordinate");
        node.y = to_real(toks[2], nl, "coordinate");
        if (toks.size() == 4) node.reward = to_real(toks[3], nl, "reward");
        src.nodes.push_back(node);
        ++pos;
      }
      continue;
    }

    if (key == "SET_SECTION" || key == "GTSP_SET_SECTION") {
      ++pos;
      while (pos < lines.size() && !keyword_like(lines[pos].second)) {
        // One set: tokens accumulate (possibly across lines) until "-1".
        const int set_line = lines[pos].first;
        std::vector<std::string> toks;
        bool terminated = false;
        while (pos < lines.size() && !keyword_like(lines[pos].second) &&
               !terminated) {
          std::istringstream ls(lines[pos].second);
          std::string t;
          while (ls >> t) {
            if (t == "-1") {
              terminated = true;
              break;
            }
            toks.push_back(t);
          }
          ++pos;
        }
        if (!terminated) fail(set_line, "set is not terminated by -1");
        const std::size_t header = kind == SourceKind::kCop ? 2 : 1;
        if (toks.size() < header + 1)
          fail(set_line, kind == SourceKind::kCop
                             ? "set line needs '<id> <reward> <vertex>... -1'"
                             : "set line needs '<id> <vertex>... -1'");
        SourceSet set;
        set.id = to_int(toks[0], set_line, "set id");
        if (kind == SourceKind::kCop)
          set.reward = to_real(toks[1], set_line, "set reward");
        for (std::size_t i = header; i < toks.size(); ++i)
          set.vertex_ids.push_back(to_int(toks[i], set_line, "vertex id"));
        src.sets.push_back(set);
      }
      continue;
    }

    if (key == "NAME") {
      if (!value.empty()) src.name = value;
    } else if (key == "TMAX") {
      src.tmax = to_real(value, line_no, "TMAX");
    } else if (key == "DEPOT") {
      src.depot = to_int(value, line_no, "DEPOT");
    } else if (key == "DIMENSION") {
      src.dimension = to_int(value, line_no, "DIMENSION");
    } else if (key == "EDGE_WEIGHT_TYPE") {
      if (value != "EUC_2D")
        fail(line_no, "unsupported edge weight type '" + value + "'");
    } else if (known_key(key)) {
      if (key == "EOF") break;
      // TYPE/COMMENT are informational.
    } else if (opt.strict) {
      fail(line_no, "unknown keyword '" + key + "'");
    } else if (key.size() > 8 && key.ends_with("_SECTION")) {
      ++pos;
      while (pos < lines.size() && !keyword_like(lines[pos].second)) ++pos;
      continue;
    }
    ++pos;
  }

  if (src.nodes.empty()) fail("missing NODE_COORD_SECTION");
  if (src.sets.empty()) fail("missing SET_SECTION");
  if (src.dimension && *src.dimension != static_cast<int>(src.nodes.size()))
    fail("DIMENSION " + std::to_string(*src.dimension) + " does not match " +
         std::to_string(src.nodes.size()) + " node lines");
  if (!src.tmax && opt.budget_override < 0.0) fail("missing TMAX");
  return src;
}

struct Mapped {
  Instance instance;
  std::vector<int> dense_of_node;      // source order -> dense vertex id
  std::map<int, int> dense_of_id;      // original vertex id -> dense vertex id
  int depot_dense = 0;
  std::optional<int> depot_set;        // index into sorted sets
};

// Shared front half of both adapters: vertices, depot resolution, and the
// source-set sanity checks.
Mapped map_vertices(Source& src, const AdaptOptions& opt) {
  Mapped m;
  std::sort(src.nodes.begin(), src.nodes.end(),
            [](const SourceNode& a, const SourceNode& b) { return a.id < b.id; });
  std::sort(src.sets.begin(), src.sets.end(),
            [](const SourceSet& a, const SourceSet& b) { return a.id < b.id; });

  Instance& in = m.instance;
  in.name = src.name;
  in.metric = Metric::kEuclidean;
  in.num_vertices = static_cast<int>(src.nodes.size());
  in.coords.reserve(src.nodes.size());
  for (std::size_t i = 0; i < src.nodes.size(); ++i) {
    const SourceNode& node = src.nodes[i];
    if (!m.dense_of_id.emplace(node.id, static_cast<int>(i)).second)
      fail("duplicate vertex id " + std::to_string(node.id));
    in.coords.push_back({node.x, node.y});
  }
  in.budget = opt.budget_override >= 0.0 ? opt.budget_override : *src.tmax;

  const int depot_id = src.depot.value_or(src.nodes.front().id);
  const auto it = m.dense_of_id.find(depot_id);
  if (it == m.dense_of_id.end())
    fail("depot vertex " + std::to_string(depot_id) + " has no coordinates");
  m.depot_dense = it->second;

  std::vector<int> sets_with_depot;
  for (std::size_t i = 0; i < src.sets.size(); ++i) {
    const SourceSet& set = src.sets[i];
    if (set.vertex_ids.empty())
      fail("set " + std::to_string(set.id) + " has no vertices");
    for (int v : set.vertex_ids)
      if (!m.dense_of_id.count(v))
        fail("set " + std::to_string(set.id) + " references unknown vertex " +
             std::to_string(v));
    if (std::count(set.vertex_ids.begin(), set.vertex_ids.end(), depot_id))
      sets_with_depot.push_back(static_cast<int>(i));
  }
  if (sets_with_depot.size() > 1)
    fail("depot vertex " + std::to_string(depot_id) +
         " belongs to several sets");
  if (sets_with_depot.size() == 1) {
    const SourceSet& ds = src.sets[sets_with_depot.front()];
    if (ds.vertex_ids.size() != 1)
      fail("depot set " + std::to_string(ds.id) +
           " must contain only the depot");
    m.depot_set = sets_with_depot.front();
  }

  std::vector<bool> covered(src.nodes.size(), false);
  covered[m.depot_dense] = true;  // the depot may live outside all sets
  for (const SourceSet& set : src.sets)
    for (int v : set.vertex_ids) covered[m.dense_of_id.at(v)] = true;
  for (std::size_t i = 0; i < covered.size(); ++i)
    if (!covered[i])
      fail("vertex " + std::to_string(src.nodes[i].id) +
           " belongs to no set");

  return m;
}

}  // namespace

Instance adapt_sop(const std::string& text, const AdaptOptions& opt) {
  Source src = parse_source(text, SourceKind::kSop, opt);
  Mapped m = map_vertices(src, opt);
  Instance& in = m.instance;

  // One singleton subgroup per vertex, carrying the vertex reward.
  for (int v = 0; v < in.num_vertices; ++v)
    in.subgroups.push_back({v, src.nodes[v].reward, {v}});

  for (std::size_t i = 0; i < src.sets.size(); ++i) {
    Cluster cl;
    cl.id = static_cast<int>(i);
    for (int v : src.sets[i].vertex_ids)
      cl.subgroup_ids.push_back(m.dense_of_id.at(v));
    std::sort(cl.subgroup_ids.begin(), cl.subgroup_ids.end());
    in.clusters.push_back(std::move(cl));
  }

  int start_cluster;
  if (m.depot_set) {
    start_cluster = *m.depot_set;
  } else {
    start_cluster = static_cast<int>(in.clusters.size());
    in.clusters.push_back({start_cluster, {m.depot_dense}});
  }
  in.start_cluster_id = in.end_cluster_id = start_cluster;

  const auto errs = instance_errors(in);
  if (!errs.empty()) fail(errs.front());
  return in;
}

Instance adapt_cop(const std::string& text, const AdaptOptions& opt) {
  Source src = parse_source(text, SourceKind::kCop, opt);
  Mapped m = map_vertices(src, opt);
  Instance& in = m.instance;

  // One subgroup per set holding all of its vertices, one cluster around it.
  for (std::size_t i = 0; i < src.sets.size(); ++i) {
    Subgroup sg;
    sg.id = static_cast<int>(i);
    sg.reward = src.sets[i].reward;
    for (int v : src.sets[i].vertex_ids)
      sg.vertex_ids.push_back(m.dense_of_id.at(v));
    in.subgroups.push_back(std::move(sg));
    in.clusters.push_back({static_cast<int>(i), {static_cast<int>(i)}});
  }

  int start_cluster;
  if (m.depot_set) {
    start_cluster = *m.depot_set;
  } else {
    const int sg_id = static_cast<int>(in.subgroups.size());
    in.subgroups.push_back({sg_id, 0.0, {m.depot_dense}});
    start_cluster = static_cast<int>(in.clusters.size());
    in.clusters.push_back({start_cluster, {sg_id}});
  }
  in.start_cluster_id = in.end_cluster_id = start_cluster;

  const auto errs = instance_errors(in);
  if (!errs.empty()) fail(errs.front());
  return in;
}

}  // namespace cops::io
