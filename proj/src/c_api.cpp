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

#include "cops.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cops/adapters.hpp"
#include "cops/evaluate.hpp"
#include "cops/exact.hpp"
#include "cops/format.hpp"
#include "cops/generator.hpp"
#include "cops/ilp.hpp"
#include "cops/instance.hpp"
#include "cops/render.hpp"
#include "cops/tabu.hpp"

struct cops_instance {
  cops::Instance value;
};
struct cops_solution {
  cops::Solution value;
};
struct cops_ilp {
  cops::exact::IlpModel value;
};

namespace {

void set_err(char* err, size_t errcap, const char* msg) {
  if (!err || errcap == 0) return;
  std::strncpy(err, msg, errcap - 1);
  err[errcap - 1] = '\0';
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body and maps C++ exceptions onto status codes.
template <typename Fn>
int guarded(char* err, size_t errcap, Fn&& fn) {
  try {
    return fn();
  } catch (const cops::io::ParseError& e) {
    set_err(err, errcap, e.what());
    return COPS_ERR_PARSE;
  } catch (const cops::exact::SizeLimitError& e) {
    set_err(err, errcap, e.what());
    return COPS_ERR_LIMIT;
  } catch (const std::invalid_argument& e) {
    set_err(err, errcap, e.what());
    return COPS_ERR_ARGUMENT;
  } catch (const std::logic_error& e) {
    set_err(err, errcap, e.what());
    return COPS_ERR_STATE;
  } catch (const std::bad_alloc&) {
    set_err(err, errcap, "out of memory");
    return COPS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_err(err, errcap, e.what());
    return COPS_ERR_INTERNAL;
  }
}

int require(bool ok, char* err, size_t errcap, const char* msg) {
  if (ok) return COPS_OK;
  set_err(err, errcap, msg);
  return COPS_ERR_ARGUMENT;
}

}  // namespace

extern "C" {

const char* cops_status_name(int status) {
  switch (status) {
    case COPS_OK: return "ok";
    case COPS_ERR_ARGUMENT: return "invalid argument";
    case COPS_ERR_PARSE: return "parse error";
    case COPS_ERR_STATE: return "invalid state";
    case COPS_ERR_LIMIT: return "size limit exceeded";
    case COPS_ERR_INFEASIBLE: return "infeasible";
    default: return "internal error";
  }
}

const char* cops_version(void) { return "1.0.0"; }

void cops_free_string(char* s) { delete[] s; }

int cops_instance_parse(const char* text, cops_instance** out, char* err,
                        size_t errcap) {
  if (int rc = require(text && out, err, errcap, "null argument")) return rc;
  *out = nullptr;
  return guarded(err, errcap, [&] {
    *out = new cops_instance{cops::io::parse_cops(text)};
    return COPS_OK;
  });
}

int cops_instance_write(const cops_instance* in, char** out_text, char* err,
                        size_t errcap) {
  if (int rc = require(in && out_text, err, errcap, "null argument")) return rc;
  *out_text = nullptr;
  return guarded(err, errcap, [&] {
    *out_text = dup_string(cops::io::write_cops(in->value));
    return COPS_OK;
  });
}

int cops_instance_adapt(const char* text, int source_kind, int strict,
                        double budget_override, cops_instance** out, char* err,
                        size_t errcap) {
  if (int rc = require(text && out, err, errcap, "null argument")) return rc;
  if (int rc = require(source_kind == COPS_SOURCE_SOP || source_kind == COPS_SOURCE_COP,
                       err, errcap, "unknown source kind"))
    return rc;
  *out = nullptr;
  return guarded(err, errcap, [&] {
    cops::io::AdaptOptions opt;
    opt.strict = strict != 0;
    opt.budget_override = budget_override;
    cops::Instance instance = source_kind == COPS_SOURCE_SOP
                                  ? cops::io::adapt_sop(text, opt)
                                  : cops::io::adapt_cop(text, opt);
    *out = new cops_instance{std::move(instance)};
    return COPS_OK;
  });
}

void cops_generator_config_init(cops_generator_config* config) {
  if (!config) return;
  const cops::io::GeneratorConfig d;
  config->n_clusters = d.n_clusters;
  config->subgroups_min = d.subgroups_per_cluster_min;
  config->subgroups_max = d.subgroups_per_cluster_max;
  config->vertices_min = d.vertices_per_subgroup_min;
  config->vertices_max = d.vertices_per_subgroup_max;
  config->box_min = d.box_min;
  config->box_max = d.box_max;
  config->reward_min = d.reward_min;
  config->reward_max = d.reward_max;
  config->budget_factor = d.budget_factor;
  config->circular = d.circular ? 1 : 0;
  config->seed = d.seed;
}

int cops_instance_generate(const cops_generator_config* config,
                           cops_instance** out, char* err, size_t errcap) {
  if (int rc = require(config && out, err, errcap, "null argument")) return rc;
  *out = nullptr;
  return guarded(err, errcap, [&] {
    cops::io::GeneratorConfig cfg;
    cfg.n_clusters = config->n_clusters;
    cfg.subgroups_per_cluster_min = config->subgroups_min;
    cfg.subgroups_per_cluster_max = config->subgroups_max;
    cfg.vertices_per_subgroup_min = config->vertices_min;
    cfg.vertices_per_subgroup_max = config->vertices_max;
    cfg.box_min = config->box_min;
    cfg.box_max = config->box_max;
    cfg.reward_min = config->reward_min;
    cfg.reward_max = config->reward_max;
    cfg.budget_factor = config->budget_factor;
    cfg.circular = config->circular != 0;
    cfg.seed = config->seed;
    *out = new cops_instance{cops::io::generate(cfg)};
    return COPS_OK;
  });
}

int cops_instance_with_budget(const cops_instance* in, double budget,
                              cops_instance** out, char* err, size_t errcap) {
  if (int rc = require(in && out, err, errcap, "null argument")) return rc;
  if (int rc = require(budget >= 0.0, err, errcap, "budget must be non-negative"))
    return rc;
  *out = nullptr;
  return guarded(err, errcap, [&] {
    cops::Instance copy = in->value;
    copy.budget = budget;
    *out = new cops_instance{std::move(copy)};
    return COPS_OK;
  });
}

void cops_instance_free(cops_instance* in) { delete in; }

int cops_instance_vertex_count(const cops_instance* in) {
  return in ? in->value.num_vertices : 0;
}
int cops_instance_subgroup_count(const cops_instance* in) {
  return in ? static_cast<int>(in->value.subgroups.size()) : 0;
}
int cops_instance_cluster_count(const cops_instance* in) {
  return in ? static_cast<int>(in->value.clusters.size()) : 0;
}
double cops_instance_budget(const cops_instance* in) {
  return in ? in->value.budget : 0.0;
}
int cops_instance_is_circular(const cops_instance* in) {
  return in && in->value.is_circular() ? 1 : 0;
}
int cops_instance_name(const cops_instance* in, char* buf, size_t cap) {
  if (!in) return 0;
  if (buf && cap > 0) {
    std::strncpy(buf, in->value.name.c_str(), cap - 1);
    buf[cap - 1] = '\0';
  }
  return static_cast<int>(in->value.name.size());
}

int cops_evaluate(const cops_instance* in, const int* route, int route_len,
                  const int* selected, int selected_len, cops_solution** out,
                  char* err, size_t errcap) {
  if (int rc = require(in && out && (route_len == 0 || route) &&
                           (selected_len == 0 || selected),
                       err, errcap, "null argument"))
    return rc;
  *out = nullptr;
  return guarded(err, errcap, [&] {
    std::vector<int> r(route, route + route_len);
    std::vector<int> s(selected, selected + selected_len);
    *out = new cops_solution{cops::evaluate(in->value, std::move(r), std::move(s))};
    return COPS_OK;
  });
}

int cops_validate(const cops_instance* in, const cops_solution* sol,
                  int* violation_count, char** report, char* err,
                  size_t errcap) {
  if (int rc = require(in && sol && violation_count, err, errcap, "null argument"))
    return rc;
  *violation_count = 0;
  if (report) *report = nullptr;
  return guarded(err, errcap, [&] {
    const auto violations = cops::validate(in->value, sol->value);
    *violation_count = static_cast<int>(violations.size());
    if (report) {
      std::ostringstream os;
      for (const cops::Violation& v : violations)
        os << cops::violation_kind_name(v.kind) << ": " << v.message << "\n";
      *report = dup_string(os.str());
    }
    return COPS_OK;
  });
}

double cops_solution_reward(const cops_solution* sol) {
  return sol ? sol->value.reward : 0.0;
}
double cops_solution_cost(const cops_solution* sol) {
  return sol ? sol->value.cost : 0.0;
}
int cops_solution_route_len(const cops_solution* sol) {
  return sol ? static_cast<int>(sol->value.route.size()) : 0;
}
int cops_solution_route(const cops_solution* sol, int* buf, int cap) {
  if (!sol) return 0;
  const auto& route = sol->value.route;
  if (buf) {
    const int n = std::min<int>(cap, static_cast<int>(route.size()));
    std::copy_n(route.begin(), n, buf);
  }
  return static_cast<int>(route.size());
}
int cops_solution_selected_len(const cops_solution* sol) {
  return sol ? static_cast<int>(sol->value.selected_subgroups.size()) : 0;
}
int cops_solution_selected(const cops_solution* sol, int* buf, int cap) {
  if (!sol) return 0;
  const auto& sel = sol->value.selected_subgroups;
  if (buf) {
    const int n = std::min<int>(cap, static_cast<int>(sel.size()));
    std::copy_n(sel.begin(), n, buf);
  }
  return static_cast<int>(sel.size());
}
void cops_solution_free(cops_solution* sol) { delete sol; }

void cops_tabu_params_init(cops_tabu_params* params) {
  if (!params) return;
  const cops::tabu::SearchParams d;
  params->alpha = d.alpha;
  params->beta = d.beta;
  params->old_removal_threshold = d.old_removal_threshold;
  params->lambda = d.lambda;
  params->seed = d.seed;
  params->max_iterations = d.max_iterations;
}

int cops_solve_tabu(const cops_instance* in, const cops_tabu_params* params,
                    cops_solution** out, cops_run_stats* stats,
                    char** trace_csv, char* err, size_t errcap) {
  if (int rc = require(in && params && out, err, errcap, "null argument"))
    return rc;
  *out = nullptr;
  if (trace_csv) *trace_csv = nullptr;
  return guarded(err, errcap, [&] {
    cops::require_valid(in->value);
    cops::tabu::SearchParams p;
    p.alpha = params->alpha;
    p.beta = params->beta;
    p.old_removal_threshold = params->old_removal_threshold;
    p.lambda = params->lambda;
    p.seed = params->seed;
    p.max_iterations = params->max_iterations;
    cops::tabu::TabuResult result = cops::tabu::solve_tabu(in->value, p);
    if (stats) {
      stats->iterations = result.stats.iterations;
      stats->improvements = result.stats.improvements;
      stats->wall_seconds = result.stats.wall_seconds;
    }
    if (trace_csv) *trace_csv = dup_string(cops::tabu::trace_csv(result.stats.trace));
    if (!result.best) {
      set_err(err, errcap, "no feasible route within the budget");
      return static_cast<int>(COPS_ERR_INFEASIBLE);
    }
    *out = new cops_solution{std::move(*result.best)};
    return static_cast<int>(COPS_OK);
  });
}

int cops_solve_exact(const cops_instance* in, int vertex_limit,
                     cops_solution** out, char* err, size_t errcap) {
  if (int rc = require(in && out, err, errcap, "null argument")) return rc;
  *out = nullptr;
  return guarded(err, errcap, [&] {
    auto best = cops::exact::solve_exact(in->value, vertex_limit);
    if (!best) {
      set_err(err, errcap, "no feasible route within the budget");
      return static_cast<int>(COPS_ERR_INFEASIBLE);
    }
    *out = new cops_solution{std::move(*best)};
    return static_cast<int>(COPS_OK);
  });
}

int cops_build_ilp(const cops_instance* in, int subtour_mode, int subtour_k,
                   cops_ilp** out, char* err, size_t errcap) {
  if (int rc = require(in && out, err, errcap, "null argument")) return rc;
  *out = nullptr;
  return guarded(err, errcap, [&] {
    cops::exact::SubtourMode mode;
    switch (subtour_mode) {
      case COPS_SUBTOUR_NONE: mode = cops::exact::SubtourMode::None(); break;
      case COPS_SUBTOUR_ALL_UP_TO:
        mode = cops::exact::SubtourMode::AllUpTo(subtour_k);
        break;
      case COPS_SUBTOUR_LAZY: mode = cops::exact::SubtourMode::Lazy(); break;
      default: throw std::invalid_argument("unknown subtour mode");
    }
    *out = new cops_ilp{cops::exact::build_ilp(in->value, mode)};
    return COPS_OK;
  });
}

int cops_ilp_export_lp(const cops_ilp* model, char** out_text, char* err,
                       size_t errcap) {
  if (int rc = require(model && out_text, err, errcap, "null argument"))
    return rc;
  *out_text = nullptr;
  return guarded(err, errcap, [&] {
    *out_text = dup_string(cops::exact::export_lp(model->value));
    return COPS_OK;
  });
}

int cops_ilp_var_count(const cops_ilp* model) {
  return model ? static_cast<int>(model->value.vars.size()) : 0;
}
int cops_ilp_row_count(const cops_ilp* model) {
  return model ? static_cast<int>(model->value.rows.size()) : 0;
}
void cops_ilp_free(cops_ilp* model) { delete model; }

int cops_separate_subtours(const cops_instance* in, const double* x, int x_len,
                           const double* y, int y_len, char** cuts_lp,
                           int* cut_count, char* err, size_t errcap) {
  if (int rc = require(in && x && y && cut_count, err, errcap, "null argument"))
    return rc;
  *cut_count = 0;
  if (cuts_lp) *cuts_lp = nullptr;
  return guarded(err, errcap, [&] {
    const auto cuts = cops::exact::separate_subtours(
        in->value, std::span<const double>(x, x_len),
        std::span<const double>(y, y_len));
    *cut_count = static_cast<int>(cuts.size());
    if (cuts_lp) {
      // Cut rows reference the same variable names as the exported model.
      const cops::exact::IlpModel model =
          cops::exact::build_ilp(in->value, cops::exact::SubtourMode::None());
      std::ostringstream os;
      for (const auto& cut : cuts) os << cops::exact::lp_row(model, cut) << "\n";
      *cuts_lp = dup_string(os.str());
    }
    return COPS_OK;
  });
}

int cops_render_svg(const cops_instance* in, const cops_solution* sol,
                    char** svg, char* err, size_t errcap) {
  if (int rc = require(in && sol && svg, err, errcap, "null argument")) return rc;
  *svg = nullptr;
  return guarded(err, errcap, [&] {
    *svg = dup_string(cops::render_route_svg(in->value, sol->value));
    return COPS_OK;
  });
}

}  // extern "C"
