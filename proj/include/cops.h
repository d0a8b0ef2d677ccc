/* Copyright 2026 The COPS Solver Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the COPS solver shared library.
 *
 * Conventions:
 *   - Objects are opaque handles created by cops_* constructors and released
 *     with their matching cops_*_free function.
 *   - Fallible calls return a cops_status code (COPS_OK == 0) and write a
 *     human-readable message into the caller-provided error buffer.
 *   - Strings returned through char** out-parameters are heap-allocated and
 *     must be released with cops_free_string.
 */

#ifndef COPS_H_
#define COPS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define COPS_API __declspec(dllexport)
#else
#define COPS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cops_instance cops_instance;
typedef struct cops_solution cops_solution;
typedef struct cops_ilp cops_ilp;

typedef enum cops_status {
  COPS_OK = 0,
  COPS_ERR_ARGUMENT = 1,   /* invalid argument / invalid data */
  COPS_ERR_PARSE = 2,      /* malformed input text */
  COPS_ERR_STATE = 3,      /* operation not applicable to this object */
  COPS_ERR_LIMIT = 4,      /* instance exceeds a size limit */
  COPS_ERR_INFEASIBLE = 5, /* no feasible route exists */
  COPS_ERR_INTERNAL = 6
} cops_status;

COPS_API const char* cops_status_name(int status);
COPS_API const char* cops_version(void);
COPS_API void cops_free_string(char* s);

/* ---- instances ------------------------------------------------------- */

COPS_API int cops_instance_parse(const char* text, cops_instance** out,
                                 char* err, size_t errcap);
COPS_API int cops_instance_write(const cops_instance* instance, char** out_text,
                                 char* err, size_t errcap);

#define COPS_SOURCE_SOP 0
#define COPS_SOURCE_COP 1

/* budget_override < 0 keeps the TMAX of the source file. */
COPS_API int cops_instance_adapt(const char* text, int source_kind, int strict,
                                 double budget_override, cops_instance** out,
                                 char* err, size_t errcap);

typedef struct cops_generator_config {
  int n_clusters;
  int subgroups_min, subgroups_max;
  int vertices_min, vertices_max;
  double box_min, box_max;
  double reward_min, reward_max;
  double budget_factor;
  int circular;
  uint64_t seed;
} cops_generator_config;

COPS_API void cops_generator_config_init(cops_generator_config* config);
COPS_API int cops_instance_generate(const cops_generator_config* config,
                                    cops_instance** out, char* err,
                                    size_t errcap);

/* Copy of the instance with a different budget (for budget sweeps). */
COPS_API int cops_instance_with_budget(const cops_instance* instance,
                                       double budget, cops_instance** out,
                                       char* err, size_t errcap);

COPS_API void cops_instance_free(cops_instance* instance);

COPS_API int cops_instance_vertex_count(const cops_instance* instance);
COPS_API int cops_instance_subgroup_count(const cops_instance* instance);
COPS_API int cops_instance_cluster_count(const cops_instance* instance);
COPS_API double cops_instance_budget(const cops_instance* instance);
COPS_API int cops_instance_is_circular(const cops_instance* instance);
/* Copies the name (truncating) and returns its full length. */
COPS_API int cops_instance_name(const cops_instance* instance, char* buf,
                                size_t cap);

/* ---- solutions ------------------------------------------------------- */

COPS_API int cops_evaluate(const cops_instance* instance, const int* route,
                           int route_len, const int* selected,
                           int selected_len, cops_solution** out, char* err,
                           size_t errcap);

/* violation_count receives the number of violated constraints (0 means the
 * solution is feasible); report (optional) receives one line per violation. */
COPS_API int cops_validate(const cops_instance* instance,
                           const cops_solution* solution, int* violation_count,
                           char** report, char* err, size_t errcap);

COPS_API double cops_solution_reward(const cops_solution* solution);
COPS_API double cops_solution_cost(const cops_solution* solution);
COPS_API int cops_solution_route_len(const cops_solution* solution);
COPS_API int cops_solution_route(const cops_solution* solution, int* buf,
                                 int cap);
COPS_API int cops_solution_selected_len(const cops_solution* solution);
COPS_API int cops_solution_selected(const cops_solution* solution, int* buf,
                                    int cap);
COPS_API void cops_solution_free(cops_solution* solution);

/* ---- solvers --------------------------------------------------------- */

typedef struct cops_tabu_params {
  int alpha;
  int beta;
  int old_removal_threshold; /* 0 = same as beta */
  int lambda;
  uint64_t seed;
  int64_t max_iterations; /* 0 = no cap */
} cops_tabu_params;

COPS_API void cops_tabu_params_init(cops_tabu_params* params);

typedef struct cops_run_stats {
  int64_t iterations;
  int64_t improvements;
  double wall_seconds;
} cops_run_stats;

/* stats and trace_csv are optional (pass NULL). Returns COPS_ERR_INFEASIBLE
 * when the instance admits no feasible route. */
COPS_API int cops_solve_tabu(const cops_instance* instance,
                             const cops_tabu_params* params,
                             cops_solution** out, cops_run_stats* stats,
                             char** trace_csv, char* err, size_t errcap);

/* vertex_limit <= 0 selects the default desk-scale limit (20). */
COPS_API int cops_solve_exact(const cops_instance* instance, int vertex_limit,
                              cops_solution** out, char* err, size_t errcap);

/* ---- integer model --------------------------------------------------- */

#define COPS_SUBTOUR_NONE 0
#define COPS_SUBTOUR_ALL_UP_TO 1
#define COPS_SUBTOUR_LAZY 2

COPS_API int cops_build_ilp(const cops_instance* instance, int subtour_mode,
                            int subtour_k, cops_ilp** out, char* err,
                            size_t errcap);
COPS_API int cops_ilp_export_lp(const cops_ilp* model, char** out_text,
                                char* err, size_t errcap);
COPS_API int cops_ilp_var_count(const cops_ilp* model);
COPS_API int cops_ilp_row_count(const cops_ilp* model);
COPS_API void cops_ilp_free(cops_ilp* model);

/* x has one entry per complete-graph edge (pairs u < v in lexicographic
 * order), y one per vertex. Emits the violated subtour rows in LP format,
 * one per line. */
COPS_API int cops_separate_subtours(const cops_instance* instance,
                                    const double* x, int x_len, const double* y,
                                    int y_len, char** cuts_lp, int* cut_count,
                                    char* err, size_t errcap);

/* ---- drawing --------------------------------------------------------- */

COPS_API int cops_render_svg(const cops_instance* instance,
                             const cops_solution* solution, char** svg,
                             char* err, size_t errcap);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* COPS_H_ */
