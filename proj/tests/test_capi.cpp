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

// Exercises the extern-C surface the shared library exports. Everything here
// goes through cops.h only.

#include <cstring>
#include <string>
#include <vector>

#include "cops.h"
#include "doctest.h"

namespace {

const char* kDoc = R"(NAME capi-demo
BUDGET 40
METRIC EUCLIDEAN
START_CLUSTER 0
END_CLUSTER 0
VERTICES 5
0 0 0
1 6 0
2 9 0
3 0 8
4 0 12
SUBGROUPS 5
0 0 0
1 1 1
2 3 1 2
3 2 3
4 5 3 4
CLUSTERS 3
0 0
1 1 2
2 3 4
EOF
)";

}  // namespace

TEST_CASE("parse, write, and accessors work through the C boundary") {
  char err[256] = {0};
  cops_instance* in = nullptr;
  REQUIRE(cops_instance_parse(kDoc, &in, err, sizeof err) == COPS_OK);
  CHECK(cops_instance_vertex_count(in) == 5);
  CHECK(cops_instance_subgroup_count(in) == 5);
  CHECK(cops_instance_cluster_count(in) == 3);
  CHECK(cops_instance_budget(in) == 40.0);
  CHECK(cops_instance_is_circular(in) == 1);

  char name[64];
  CHECK(cops_instance_name(in, name, sizeof name) == 9);
  CHECK(std::string(name) == "capi-demo");

  char* text = nullptr;
  REQUIRE(cops_instance_write(in, &text, err, sizeof err) == COPS_OK);
  cops_instance* again = nullptr;
  REQUIRE(cops_instance_parse(text, &again, err, sizeof err) == COPS_OK);
  CHECK(cops_instance_vertex_count(again) == 5);
  cops_free_string(text);
  cops_instance_free(again);
  cops_instance_free(in);
}

TEST_CASE("parse errors surface with a message and status") {
  char err[256] = {0};
  cops_instance* in = nullptr;
  CHECK(cops_instance_parse("NAME x\nBUDGET oops\n", &in, err, sizeof err) ==
        COPS_ERR_PARSE);
  CHECK(in == nullptr);
  CHECK(std::strlen(err) > 0);
  CHECK(cops_instance_parse(nullptr, &in, err, sizeof err) ==
        COPS_ERR_ARGUMENT);
}

TEST_CASE("both solvers agree on the demo through the C interface") {
  char err[256] = {0};
  cops_instance* in = nullptr;
  REQUIRE(cops_instance_parse(kDoc, &in, err, sizeof err) == COPS_OK);

  cops_solution* exact = nullptr;
  REQUIRE(cops_solve_exact(in, 0, &exact, err, sizeof err) == COPS_OK);
  CHECK(cops_solution_reward(exact) == doctest::Approx(8.0));

  cops_tabu_params params;
  cops_tabu_params_init(&params);
  CHECK(params.beta == 300);
  params.seed = 7;
  cops_solution* tabu = nullptr;
  cops_run_stats stats{};
  char* trace = nullptr;
  REQUIRE(cops_solve_tabu(in, &params, &tabu, &stats, &trace, err,
                          sizeof err) == COPS_OK);
  CHECK(cops_solution_reward(tabu) <= cops_solution_reward(exact) + 1e-9);
  CHECK(stats.iterations > 0);
  REQUIRE(trace != nullptr);
  CHECK(std::string(trace).rfind("iteration,move,reward,cost", 0) == 0);
  cops_free_string(trace);

  int violations = -1;
  char* report = nullptr;
  REQUIRE(cops_validate(in, tabu, &violations, &report, err, sizeof err) ==
          COPS_OK);
  CHECK(violations == 0);
  CHECK(report != nullptr);
  cops_free_string(report);

  std::vector<int> route(cops_solution_route_len(exact));
  CHECK(cops_solution_route(exact, route.data(),
                            static_cast<int>(route.size())) ==
        static_cast<int>(route.size()));
  CHECK(route.front() == 0);

  cops_solution_free(exact);
  cops_solution_free(tabu);
  cops_instance_free(in);
}

TEST_CASE("evaluate and render through the C interface") {
  char err[256] = {0};
  cops_instance* in = nullptr;
  REQUIRE(cops_instance_parse(kDoc, &in, err, sizeof err) == COPS_OK);

  const int route[] = {0, 1};
  const int selected[] = {0, 1};
  cops_solution* sol = nullptr;
  REQUIRE(cops_evaluate(in, route, 2, selected, 2, &sol, err, sizeof err) ==
          COPS_OK);
  CHECK(cops_solution_cost(sol) == doctest::Approx(12.0));
  CHECK(cops_solution_reward(sol) == doctest::Approx(1.0));

  char* svg = nullptr;
  REQUIRE(cops_render_svg(in, sol, &svg, err, sizeof err) == COPS_OK);
  std::string image = svg;
  cops_free_string(svg);
  CHECK(image.find("<svg") != std::string::npos);
  // One circle per vertex.
  int circles = 0;
  for (std::size_t pos = image.find("<circle"); pos != std::string::npos;
       pos = image.find("<circle", pos + 1))
    ++circles;
  CHECK(circles == 5);

  cops_solution_free(sol);
  cops_instance_free(in);
}

TEST_CASE("model building and separation through the C interface") {
  char err[256] = {0};
  cops_instance* in = nullptr;
  REQUIRE(cops_instance_parse(kDoc, &in, err, sizeof err) == COPS_OK);

  cops_ilp* model = nullptr;
  REQUIRE(cops_build_ilp(in, COPS_SUBTOUR_ALL_UP_TO, 2, &model, err,
                         sizeof err) == COPS_OK);
  // 10 edges + 5 y + 5 z + 3 w.
  CHECK(cops_ilp_var_count(model) == 23);
  CHECK(cops_ilp_row_count(model) > 0);

  char* lp = nullptr;
  REQUIRE(cops_ilp_export_lp(model, &lp, err, sizeof err) == COPS_OK);
  std::string text = lp;
  cops_free_string(lp);
  CHECK(text.find("Maximize") != std::string::npos);
  CHECK(text.find("Binary") != std::string::npos);
  cops_ilp_free(model);

  // Two disjoint loops: the stray one yields one cut.
  std::vector<double> x(10, 0.0);
  std::vector<double> y(5, 0.0);
  auto edge = [](int n, int u, int v) {
    if (u > v) std::swap(u, v);
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
  };
  y[0] = y[1] = y[2] = 1.0;
  x[edge(5, 1, 2)] = 2.0;  // stray out-and-back loop between 1 and 2
  int cuts = 0;
  char* rows = nullptr;
  REQUIRE(cops_separate_subtours(in, x.data(), 10, y.data(), 5, &rows, &cuts,
                                 err, sizeof err) == COPS_OK);
  CHECK(cuts == 1);
  REQUIRE(rows != nullptr);
  CHECK(std::string(rows).find("subtour_cut_0") != std::string::npos);
  cops_free_string(rows);

  cops_instance_free(in);
}

TEST_CASE("generation and adaptation through the C interface") {
  char err[256] = {0};
  cops_generator_config cfg;
  cops_generator_config_init(&cfg);
  cfg.n_clusters = 4;
  cfg.seed = 99;
  cops_instance* gen = nullptr;
  REQUIRE(cops_instance_generate(&cfg, &gen, err, sizeof err) == COPS_OK);
  CHECK(cops_instance_vertex_count(gen) >= 4);

  cops_instance* tighter = nullptr;
  REQUIRE(cops_instance_with_budget(gen, 1.0, &tighter, err, sizeof err) ==
          COPS_OK);
  CHECK(cops_instance_budget(tighter) == 1.0);
  cops_instance_free(tighter);
  cops_instance_free(gen);

  const char* sop =
      "TMAX 10\nDEPOT 1\nNODE_COORD_SECTION\n1 0 0\n2 1 0\n"
      "SET_SECTION\n1 1 -1\n2 2 -1\nEOF\n";
  cops_instance* adapted = nullptr;
  REQUIRE(cops_instance_adapt(sop, COPS_SOURCE_SOP, 0, -1.0, &adapted, err,
                              sizeof err) == COPS_OK);
  CHECK(cops_instance_vertex_count(adapted) == 2);
  cops_instance_free(adapted);

  CHECK(cops_instance_adapt(sop, COPS_SOURCE_COP, 0, -1.0, &adapted, err,
                            sizeof err) == COPS_ERR_PARSE);
}

TEST_CASE("infeasible instances map to the infeasible status") {
  const char* doc =
      "NAME far\nBUDGET 1\nMETRIC EUCLIDEAN\nSTART_CLUSTER 0\nEND_CLUSTER 1\n"
      "VERTICES 2\n0 0 0\n1 50 0\nSUBGROUPS 2\n0 0 0\n1 0 1\n"
      "CLUSTERS 2\n0 0\n1 1\nEOF\n";
  char err[256] = {0};
  cops_instance* in = nullptr;
  REQUIRE(cops_instance_parse(doc, &in, err, sizeof err) == COPS_OK);
  cops_solution* sol = nullptr;
  CHECK(cops_solve_exact(in, 0, &sol, err, sizeof err) == COPS_ERR_INFEASIBLE);
  CHECK(sol == nullptr);
  cops_tabu_params params;
  cops_tabu_params_init(&params);
  CHECK(cops_solve_tabu(in, &params, &sol, nullptr, nullptr, err, sizeof err) ==
        COPS_ERR_INFEASIBLE);
  cops_instance_free(in);
}

TEST_CASE("status names are stable strings") {
  CHECK(std::string(cops_status_name(COPS_OK)) == "ok");
  CHECK(std::string(cops_status_name(COPS_ERR_PARSE)) == "parse error");
  CHECK(std::string(cops_version()).size() > 0);
}
