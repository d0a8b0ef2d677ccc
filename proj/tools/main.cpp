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

// Command-line front end. Deliberately a thin shell over the shared-library
// C interface (cops.h): all solving logic stays behind that boundary.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cops.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

struct InstanceDeleter {
  void operator()(cops_instance* p) const { cops_instance_free(p); }
};
struct SolutionDeleter {
  void operator()(cops_solution* p) const { cops_solution_free(p); }
};
struct IlpDeleter {
  void operator()(cops_ilp* p) const { cops_ilp_free(p); }
};
using InstancePtr = std::unique_ptr<cops_instance, InstanceDeleter>;
using SolutionPtr = std::unique_ptr<cops_solution, SolutionDeleter>;
using IlpPtr = std::unique_ptr<cops_ilp, IlpDeleter>;

std::string take_string(char* owned) {
  std::string out = owned ? owned : "";
  cops_free_string(owned);
  return out;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out.good()) return false;
  out << content;
  return out.good();
}

std::string real_str(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string instance_name(const cops_instance* in) {
  char buf[256];
  cops_instance_name(in, buf, sizeof buf);
  return buf;
}

InstancePtr parse_instance_file(const std::string& path, int* exit_code) {
  const auto text = read_file(path);
  if (!text) {
    std::cerr << "error: cannot read '" << path << "'\n";
    *exit_code = kExitError;
    return nullptr;
  }
  char err[512];
  cops_instance* raw = nullptr;
  if (cops_instance_parse(text->c_str(), &raw, err, sizeof err) != COPS_OK) {
    std::cerr << "error: " << path << ": " << err << "\n";
    *exit_code = kExitError;
    return nullptr;
  }
  *exit_code = kExitOk;
  return InstancePtr(raw);
}

struct SolveOutcome {
  SolutionPtr solution;
  double wall_seconds = 0.0;
  int64_t iterations = 0;
  std::string trace;  // tabu only
  std::string error;
  int status = COPS_OK;
};

SolveOutcome run_solver(const cops_instance* in, const std::string& solver,
                        const cops_tabu_params& params, int runs,
                        int vertex_limit, bool want_trace) {
  SolveOutcome out;
  char err[512];
  if (solver == "exact") {
    cops_solution* raw = nullptr;
    const auto t0 = std::chrono::steady_clock::now();
    out.status = cops_solve_exact(in, vertex_limit, &raw, err, sizeof err);
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (out.status != COPS_OK) {
      out.error = err;
      return out;
    }
    out.solution.reset(raw);
    return out;
  }

  // Best of N independently seeded runs; ties keep the earliest seed.
  for (int r = 0; r < runs; ++r) {
    cops_tabu_params p = params;
    p.seed = params.seed + static_cast<uint64_t>(r);
    cops_solution* raw = nullptr;
    cops_run_stats stats{};
    char* trace = nullptr;
    out.status = cops_solve_tabu(in, &p, &raw, &stats,
                                 want_trace ? &trace : nullptr, err, sizeof err);
    if (out.status != COPS_OK) {
      if (trace) cops_free_string(trace);
      out.error = err;
      out.solution.reset();
      return out;
    }
    SolutionPtr sol(raw);
    out.wall_seconds += stats.wall_seconds;
    out.iterations += stats.iterations;
    const bool better =
        !out.solution ||
        cops_solution_reward(sol.get()) >
            cops_solution_reward(out.solution.get()) + 1e-9 ||
        (std::abs(cops_solution_reward(sol.get()) -
                  cops_solution_reward(out.solution.get())) <= 1e-9 &&
         cops_solution_cost(sol.get()) <
             cops_solution_cost(out.solution.get()) - 1e-9);
    if (better) {
      out.solution = std::move(sol);
      if (want_trace) out.trace = take_string(trace);
    } else if (trace) {
      cops_free_string(trace);
    }
  }
  return out;
}

std::string route_file_text(const cops_instance* in, const cops_solution* sol,
                            const std::string& solver) {
  std::ostringstream os;
  os << "INSTANCE " << instance_name(in) << "\n";
  os << "SOLVER " << solver << "\n";
  os << "REWARD " << real_str(cops_solution_reward(sol)) << "\n";
  os << "COST " << real_str(cops_solution_cost(sol)) << "\n";
  std::vector<int> route(cops_solution_route_len(sol));
  cops_solution_route(sol, route.data(), static_cast<int>(route.size()));
  os << "ROUTE " << route.size();
  for (int v : route) os << " " << v;
  os << "\n";
  std::vector<int> selected(cops_solution_selected_len(sol));
  cops_solution_selected(sol, selected.data(),
                         static_cast<int>(selected.size()));
  os << "SELECTED " << selected.size();
  for (int s : selected) os << " " << s;
  os << "\n";
  return os.str();
}

int cmd_solve(const std::string& in_path, const std::string& solver,
              const cops_tabu_params& params, int runs, int vertex_limit,
              const std::string& out_route, const std::string& svg_path,
              const std::string& trace_path) {
  int rc = kExitOk;
  InstancePtr instance = parse_instance_file(in_path, &rc);
  if (!instance) return rc;

  SolveOutcome outcome = run_solver(instance.get(), solver, params, runs,
                                    vertex_limit, !trace_path.empty());
  if (outcome.status == COPS_ERR_INFEASIBLE) {
    std::cerr << "infeasible: " << outcome.error << "\n";
    return kExitInfeasible;
  }
  if (outcome.status != COPS_OK) {
    std::cerr << "error: " << outcome.error << "\n";
    return kExitError;
  }
  const cops_solution* sol = outcome.solution.get();

  // Timing goes to stderr so that identical inputs print identical rows.
  std::cout << "instance,size,budget,solver,seed,runs,reward,length\n";
  std::cout << instance_name(instance.get()) << ","
            << cops_instance_vertex_count(instance.get()) << ","
            << real_str(cops_instance_budget(instance.get())) << "," << solver
            << "," << params.seed << "," << (solver == "exact" ? 1 : runs)
            << "," << real_str(cops_solution_reward(sol)) << ","
            << real_str(cops_solution_cost(sol)) << "\n";
  std::fprintf(stderr, "time_s=%.3f iterations=%lld\n", outcome.wall_seconds,
               static_cast<long long>(outcome.iterations));

  if (!out_route.empty() &&
      !write_file(out_route, route_file_text(instance.get(), sol, solver))) {
    std::cerr << "error: cannot write '" << out_route << "'\n";
    return kExitError;
  }
  if (!svg_path.empty()) {
    char err[512];
    char* svg = nullptr;
    if (cops_render_svg(instance.get(), sol, &svg, err, sizeof err) !=
        COPS_OK) {
      std::cerr << "error: " << err << "\n";
      return kExitError;
    }
    if (!write_file(svg_path, take_string(svg))) {
      std::cerr << "error: cannot write '" << svg_path << "'\n";
      return kExitError;
    }
  }
  if (!trace_path.empty() && !write_file(trace_path, outcome.trace)) {
    std::cerr << "error: cannot write '" << trace_path << "'\n";
    return kExitError;
  }
  return kExitOk;
}

int cmd_convert(const std::string& from, const std::string& in_path,
                const std::string& out_path, double budget, bool strict) {
  const auto text = read_file(in_path);
  if (!text) {
    std::cerr << "error: cannot read '" << in_path << "'\n";
    return kExitError;
  }
  char err[512];
  cops_instance* raw = nullptr;
  const int kind = from == "sop" ? COPS_SOURCE_SOP : COPS_SOURCE_COP;
  if (cops_instance_adapt(text->c_str(), kind, strict ? 1 : 0, budget, &raw,
                          err, sizeof err) != COPS_OK) {
    std::cerr << "error: " << in_path << ": " << err << "\n";
    return kExitError;
  }
  InstancePtr instance(raw);
  char* doc = nullptr;
  if (cops_instance_write(instance.get(), &doc, err, sizeof err) != COPS_OK) {
    std::cerr << "error: " << err << "\n";
    return kExitError;
  }
  if (!write_file(out_path, take_string(doc))) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return kExitError;
  }
  std::cerr << "wrote " << out_path << " ("
            << cops_instance_vertex_count(instance.get()) << " vertices, "
            << cops_instance_subgroup_count(instance.get()) << " subgroups, "
            << cops_instance_cluster_count(instance.get()) << " clusters)\n";
  return kExitOk;
}

int cmd_generate(const cops_generator_config& config,
                 const std::string& out_path) {
  char err[512];
  cops_instance* raw = nullptr;
  if (cops_instance_generate(&config, &raw, err, sizeof err) != COPS_OK) {
    std::cerr << "error: " << err << "\n";
    return kExitError;
  }
  InstancePtr instance(raw);
  char* doc = nullptr;
  if (cops_instance_write(instance.get(), &doc, err, sizeof err) != COPS_OK) {
    std::cerr << "error: " << err << "\n";
    return kExitError;
  }
  const std::string text = take_string(doc);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else if (!write_file(out_path, text)) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return kExitError;
  }
  return kExitOk;
}

int cmd_export(const std::string& in_path, const std::string& out_path,
               const std::string& subtour, int subtour_k) {
  int rc = kExitOk;
  InstancePtr instance = parse_instance_file(in_path, &rc);
  if (!instance) return rc;

  int mode = COPS_SUBTOUR_ALL_UP_TO;
  if (subtour == "none") mode = COPS_SUBTOUR_NONE;
  if (subtour == "lazy") mode = COPS_SUBTOUR_LAZY;

  int k = subtour_k;
  if (mode == COPS_SUBTOUR_ALL_UP_TO && k <= 0)
    k = cops_instance_vertex_count(instance.get());
  if (mode == COPS_SUBTOUR_ALL_UP_TO && k > 20) {
    std::cerr << "error: refusing to enumerate subsets up to size " << k
              << "; pass a smaller --subtour-k\n";
    return kExitError;
  }

  char err[512];
  cops_ilp* raw = nullptr;
  if (cops_build_ilp(instance.get(), mode, k, &raw, err, sizeof err) !=
      COPS_OK) {
    std::cerr << "error: " << err << "\n";
    return kExitError;
  }
  IlpPtr model(raw);
  char* lp = nullptr;
  if (cops_ilp_export_lp(model.get(), &lp, err, sizeof err) != COPS_OK) {
    std::cerr << "error: " << err << "\n";
    return kExitError;
  }
  const std::string text = take_string(lp);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else if (!write_file(out_path, text)) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return kExitError;
  }
  std::cerr << "model: " << cops_ilp_var_count(model.get()) << " variables, "
            << cops_ilp_row_count(model.get()) << " rows\n";
  return kExitOk;
}

struct BenchTask {
  int instance_idx;
  std::string solver;
  double budget;
  int run;
  uint64_t seed;
};

struct BenchRow {
  std::string text;
  bool failed = false;
  double reward = 0.0;
  double length = 0.0;
  double time_s = 0.0;
};

int cmd_bench(const std::string& suite_dir, const std::string& out_path,
              const std::string& solvers_csv, int runs, uint64_t seed,
              const std::string& sweep_csv,
              const cops_tabu_params& base_params) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  {
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(suite_dir, ec))
      if (entry.path().extension() == ".cops")
        files.push_back(entry.path().string());
    if (ec) {
      std::cerr << "error: cannot list '" << suite_dir << "': " << ec.message()
                << "\n";
      return kExitError;
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<std::string> solvers;
  {
    std::stringstream ss(solvers_csv);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) solvers.push_back(item);
  }
  for (const std::string& s : solvers)
    if (s != "tabu" && s != "exact") {
      std::cerr << "error: unknown solver '" << s << "'\n";
      return kExitError;
    }

  std::vector<double> sweep;
  if (!sweep_csv.empty()) {
    std::stringstream ss(sweep_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      try {
        sweep.push_back(std::stod(item));
      } catch (const std::exception&) {
        std::cerr << "error: bad budget '" << item << "'\n";
        return kExitError;
      }
    }
  }

  std::ostringstream csv;
  csv << "instance,size,budget,solver,seed,run,reward,length,time_s,status\n";

  std::vector<InstancePtr> instances(files.size());
  std::vector<std::string> parse_errors(files.size());
  for (std::size_t i = 0; i < files.size(); ++i) {
    const auto text = read_file(files[i]);
    char err[512];
    cops_instance* raw = nullptr;
    if (!text) {
      parse_errors[i] = "cannot read file";
    } else if (cops_instance_parse(text->c_str(), &raw, err, sizeof err) !=
               COPS_OK) {
      parse_errors[i] = err;
    } else {
      instances[i].reset(raw);
    }
  }

  std::vector<BenchTask> tasks;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const std::vector<double> budgets =
        sweep.empty()
            ? std::vector<double>{instances[i]
                                      ? cops_instance_budget(instances[i].get())
                                      : 0.0}
            : sweep;
    for (const std::string& solver : solvers) {
      const int solver_runs = solver == "exact" ? 1 : runs;
      for (double budget : budgets)
        for (int r = 0; r < solver_runs; ++r)
          tasks.push_back({static_cast<int>(i), solver, budget, r,
                           seed + static_cast<uint64_t>(r)});
    }
  }

  // Worker pool; rows land in task order no matter who finishes first.
  std::vector<BenchRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  const char* env_threads = std::getenv("COPS_THREADS");
  unsigned n_threads = env_threads
                           ? static_cast<unsigned>(std::atoi(env_threads))
                           : std::thread::hardware_concurrency();
  n_threads = std::max<unsigned>(
      1, std::min<unsigned>(n_threads, static_cast<unsigned>(tasks.size())));

  auto worker = [&]() {
    for (std::size_t t = next.fetch_add(1); t < tasks.size();
         t = next.fetch_add(1)) {
      const BenchTask& task = tasks[t];
      BenchRow& row = rows[t];
      const std::string base =
          fs::path(files[task.instance_idx]).stem().string();
      std::ostringstream os;
      if (!instances[task.instance_idx]) {
        os << base << ",0," << real_str(task.budget) << "," << task.solver
           << "," << task.seed << "," << task.run
           << ",0,0,0.000,error: " << parse_errors[task.instance_idx];
        row.failed = true;
        row.text = os.str();
        continue;
      }

      char err[512];
      cops_instance* with_budget = nullptr;
      if (cops_instance_with_budget(instances[task.instance_idx].get(),
                                    task.budget, &with_budget, err,
                                    sizeof err) != COPS_OK) {
        os << base << ",0," << real_str(task.budget) << "," << task.solver
           << "," << task.seed << "," << task.run << ",0,0,0.000,error: " << err;
        row.failed = true;
        row.text = os.str();
        continue;
      }
      InstancePtr scoped(with_budget);

      cops_tabu_params params = base_params;
      params.seed = task.seed;
      SolveOutcome outcome =
          run_solver(scoped.get(), task.solver, params, 1, 0, false);
      os << instance_name(scoped.get()) << ","
         << cops_instance_vertex_count(scoped.get()) << ","
         << real_str(task.budget) << "," << task.solver << "," << task.seed
         << "," << task.run << ",";
      if (outcome.status == COPS_OK) {
        row.reward = cops_solution_reward(outcome.solution.get());
        row.length = cops_solution_cost(outcome.solution.get());
        row.time_s = outcome.wall_seconds;
        char time_buf[32];
        std::snprintf(time_buf, sizeof time_buf, "%.3f", outcome.wall_seconds);
        os << real_str(row.reward) << "," << real_str(row.length) << ","
           << time_buf << ",ok";
      } else if (outcome.status == COPS_ERR_INFEASIBLE) {
        os << "0,0,0.000,infeasible";
        row.failed = true;
      } else {
        os << "0,0,0.000,error: " << outcome.error;
        row.failed = true;
      }
      row.text = os.str();
    }
  };

  std::vector<std::thread> pool;
  for (unsigned i = 0; i + 1 < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  for (const BenchRow& row : rows) csv << row.text << "\n";

  // Best-of-N summary per (instance, solver, budget), in task order.
  csv << "# summary: instance,solver,budget,best_reward,best_length,"
         "mean_reward,sd_reward,mean_time_s\n";
  std::size_t t = 0;
  while (t < tasks.size()) {
    const BenchTask& head = tasks[t];
    std::size_t end = t;
    while (end < tasks.size() && tasks[end].instance_idx == head.instance_idx &&
           tasks[end].solver == head.solver && tasks[end].budget == head.budget)
      ++end;
    int ok_runs = 0;
    double best_reward = 0.0, best_length = 0.0;
    double sum = 0.0, sum_sq = 0.0, time_sum = 0.0;
    bool any_ok = false;
    for (std::size_t i = t; i < end; ++i) {
      if (rows[i].failed) continue;
      ++ok_runs;
      sum += rows[i].reward;
      sum_sq += rows[i].reward * rows[i].reward;
      time_sum += rows[i].time_s;
      if (!any_ok || rows[i].reward > best_reward + 1e-9 ||
          (std::abs(rows[i].reward - best_reward) <= 1e-9 &&
           rows[i].length < best_length - 1e-9)) {
        best_reward = rows[i].reward;
        best_length = rows[i].length;
      }
      any_ok = true;
    }
    const std::string base =
        fs::path(files[head.instance_idx]).stem().string();
    if (ok_runs > 0) {
      const double mean = sum / ok_runs;
      const double var = std::max(0.0, sum_sq / ok_runs - mean * mean);
      char time_buf[32];
      std::snprintf(time_buf, sizeof time_buf, "%.3f", time_sum / ok_runs);
      csv << "# " << base << "," << head.solver << ","
          << real_str(head.budget) << "," << real_str(best_reward) << ","
          << real_str(best_length) << "," << real_str(mean) << ","
          << real_str(std::sqrt(var)) << "," << time_buf << "\n";
    } else {
      csv << "# " << base << "," << head.solver << ","
          << real_str(head.budget) << ",failed,,,,\n";
    }
    t = end;
  }

  const std::string text = csv.str();
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else if (!write_file(out_path, text)) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return kExitError;
  }

  const bool all_failed =
      !rows.empty() && std::all_of(rows.begin(), rows.end(),
                                   [](const BenchRow& r) { return r.failed; });
  return all_failed ? kExitError : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clustered orienteering with subgroups: solver toolkit"};
  app.require_subcommand(1);

  std::string in_path, solver = "tabu", out_route, svg_path, trace_path;
  cops_tabu_params params;
  cops_tabu_params_init(&params);
  int runs = 1, vertex_limit = 0;
  auto* solve = app.add_subcommand("solve", "Solve a cops-1 instance file");
  solve->add_option("--in", in_path, "instance file (cops-1)")->required();
  solve->add_option("--solver", solver, "tabu or exact")
      ->check(CLI::IsMember({"tabu", "exact"}));
  solve->add_option("--seed", params.seed, "base RNG seed");
  solve->add_option("--alpha", params.alpha, "tabu tenure");
  solve->add_option("--beta", params.beta,
                    "stop after this many stale iterations");
  solve->add_option("--old-removal", params.old_removal_threshold,
                    "long-term removal threshold (0 = beta)");
  solve->add_option("--lambda", params.lambda, "initial-solution patience");
  solve->add_option("--max-iterations", params.max_iterations,
                    "hard iteration cap (0 = none)");
  solve->add_option("--runs", runs, "independent runs, best kept (tabu)")
      ->check(CLI::PositiveNumber);
  solve->add_option("--vertex-limit", vertex_limit,
                    "exact solver vertex limit (0 = default 20)");
  solve->add_option("--out-route", out_route, "write the route to this file");
  solve->add_option("--svg", svg_path, "draw the route to this SVG file");
  solve->add_option("--trace", trace_path,
                    "write the per-iteration CSV trace of the best run");

  std::string from_kind, conv_in, conv_out;
  double conv_budget = -1.0;
  bool conv_strict = false;
  auto* convert =
      app.add_subcommand("convert", "Reduce a set/clustered source to cops-1");
  convert->add_option("--from", from_kind, "source kind: sop or cop")
      ->required()
      ->check(CLI::IsMember({"sop", "cop"}));
  convert->add_option("--in", conv_in, "source file")->required();
  convert->add_option("--out", conv_out, "output cops-1 file")->required();
  convert->add_option("--budget", conv_budget, "override the source TMAX");
  convert->add_flag("--strict", conv_strict, "reject unknown keywords");

  cops_generator_config gen;
  cops_generator_config_init(&gen);
  std::string gen_out;
  bool gen_path = false;
  auto* generate = app.add_subcommand("generate", "Write a random instance");
  generate->add_option("--out", gen_out, "output file (default stdout)");
  generate->add_option("--clusters", gen.n_clusters, "total cluster count");
  generate->add_option("--subgroups-min", gen.subgroups_min, "per cluster");
  generate->add_option("--subgroups-max", gen.subgroups_max, "per cluster");
  generate->add_option("--vertices-min", gen.vertices_min, "per subgroup");
  generate->add_option("--vertices-max", gen.vertices_max, "per subgroup");
  generate->add_option("--box-min", gen.box_min, "coordinate box lower bound");
  generate->add_option("--box-max", gen.box_max, "coordinate box upper bound");
  generate->add_option("--reward-min", gen.reward_min, "subgroup reward range");
  generate->add_option("--reward-max", gen.reward_max, "subgroup reward range");
  generate->add_option("--budget-factor", gen.budget_factor,
                       "budget as a fraction of the greedy tour estimate");
  generate->add_flag("--path", gen_path,
                     "end the route in a separate endpoint cluster");
  generate->add_option("--seed", gen.seed, "generator seed");

  std::string exp_in, exp_out, exp_subtour = "all";
  int exp_k = 0;
  auto* exporter =
      app.add_subcommand("export", "Write the integer model in LP format");
  exporter->add_option("--in", exp_in, "instance file (cops-1)")->required();
  exporter->add_option("--out", exp_out, "output LP file (default stdout)");
  exporter->add_option("--subtour", exp_subtour, "none, all or lazy")
      ->check(CLI::IsMember({"none", "all", "lazy"}));
  exporter->add_option("--subtour-k", exp_k,
                       "cap the enumerated subset size (0 = all vertices)");

  std::string suite_dir, bench_out, bench_solvers = "tabu", bench_sweep;
  int bench_runs = 1;
  uint64_t bench_seed = 1;
  cops_tabu_params bench_params;
  cops_tabu_params_init(&bench_params);
  auto* bench = app.add_subcommand("bench", "Run a suite of instances");
  bench->add_option("--suite", suite_dir, "directory of .cops files")
      ->required();
  bench->add_option("--out", bench_out, "output CSV (default stdout)");
  bench->add_option("--solvers", bench_solvers, "comma list: tabu,exact");
  bench->add_option("--runs", bench_runs, "tabu runs per configuration")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "base seed (run r uses seed+r)");
  bench->add_option("--budget-sweep", bench_sweep,
                    "comma list of budgets replacing the instance budget");
  bench->add_option("--alpha", bench_params.alpha, "tabu tenure");
  bench->add_option("--beta", bench_params.beta, "stale-iteration stop");

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed())
    return cmd_solve(in_path, solver, params, runs, vertex_limit, out_route,
                     svg_path, trace_path);
  if (convert->parsed())
    return cmd_convert(from_kind, conv_in, conv_out, conv_budget, conv_strict);
  if (generate->parsed()) {
    gen.circular = gen_path ? 0 : 1;
    return cmd_generate(gen, gen_out);
  }
  if (exporter->parsed())
    return cmd_export(exp_in, exp_out, exp_subtour, exp_k);
  if (bench->parsed())
    return cmd_bench(suite_dir, bench_out, bench_solvers, bench_runs,
                     bench_seed, bench_sweep, bench_params);
  return kExitError;
}
