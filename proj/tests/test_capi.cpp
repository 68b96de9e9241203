// Copyright 2026 The thermoq Authors
//
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

// Exercises the shared library through its C header only.
#include <cstring>
#include <string>

#include "doctest.h"
#include "thermoq/thermoq.h"

namespace {

struct Config {
  thermoq_config* p = nullptr;
  Config() { REQUIRE(thermoq_config_new(&p) == THERMOQ_OK); }
  ~Config() { thermoq_config_free(p); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  thermoq_free_string(s);
  return out;
}

}  // namespace

TEST_CASE("steady report through the C API") {
  Config c;
  thermoq_report* r = nullptr;
  REQUIRE(thermoq_steady(c.p, &r) == THERMOQ_OK);
  double q = 0.0;
  CHECK(thermoq_report_get(r, "Q_c", &q) == THERMOQ_OK);
  CHECK(q == doctest::Approx(0.010138062093096846));
  double pops[4];
  size_t n = 0;
  CHECK(thermoq_report_populations(r, pops, 4, &n) == THERMOQ_OK);
  CHECK(n == 4);
  CHECK(pops[0] + pops[1] + pops[2] + pops[3] == doctest::Approx(1.0));
  char* json = nullptr;
  CHECK(thermoq_report_json(r, &json) == THERMOQ_OK);
  CHECK(take(json).find("\"cooling\": true") != std::string::npos);
  CHECK(thermoq_report_get(r, "bogus", &q) == THERMOQ_ERR_VALIDATION);
  CHECK(std::strstr(thermoq_last_error(), "bogus") != nullptr);
  thermoq_report_free(r);
}

TEST_CASE("status codes") {
  Config c;
  CHECK(thermoq_config_set(c.p, "E2", "0.5", "--e2") == THERMOQ_OK);
  thermoq_report* r = nullptr;
  CHECK(thermoq_steady(c.p, &r) == THERMOQ_ERR_VALIDATION);
  CHECK(std::string(thermoq_last_error()).find("--e2: field 'E2': E2 must exceed E1") != std::string::npos);
  CHECK(r == nullptr);

  Config flat;
  thermoq_config_set(flat.p, "T_r", "1", nullptr);
  int passed = 0;
  CHECK(thermoq_carnot(flat.p, &passed, nullptr) == THERMOQ_ERR_SEARCH);

  Config narrow;
  thermoq_config_set(narrow.p, "bracket", "1.5:3", nullptr);
  CHECK(thermoq_optimize_e2(narrow.p, nullptr, nullptr, nullptr) == THERMOQ_ERR_SEARCH);

  Config file;
  CHECK(thermoq_config_load_json(file.p, "/nonexistent/run.json") == THERMOQ_ERR_IO);
  CHECK(thermoq_config_new(nullptr) == THERMOQ_ERR_VALIDATION);
  CHECK(thermoq_config_parse_json(file.p, "{\"T_h\": 40}", "inline") == THERMOQ_OK);
  double th = 0.0;
  CHECK(thermoq_config_get(file.p, "th", &th) == THERMOQ_OK);
  CHECK(th == 40.0);
}

TEST_CASE("experiments through the C API") {
  Config c;
  char* csv = nullptr;
  char* svg = nullptr;
  REQUIRE(thermoq_sweep(c.p, "T_h:2:20:3", 2, &csv, &svg) == THERMOQ_OK);
  CHECK(take(csv).find("# config:") != std::string::npos);
  CHECK(take(svg).find("<svg") == 0);
  CHECK(thermoq_sweep(c.p, nullptr, 1, &csv, nullptr) == THERMOQ_ERR_VALIDATION);

  double e2 = 0.0, q = 0.0;
  CHECK(thermoq_optimize_e2(c.p, &e2, &q, nullptr) == THERMOQ_OK);
  CHECK(e2 == doctest::Approx(5.173067).epsilon(1e-5));

  int winner = -1;
  char* json = nullptr;
  CHECK(thermoq_compare(c.p, &winner, &json) == THERMOQ_OK);
  CHECK(winner == THERMOQ_WINNER_QUTRIT);
  take(json);
  CHECK(thermoq_compare_search(c.p, 20, 1, &json) == THERMOQ_OK);
  CHECK(take(json).find("\"draws\": 20") != std::string::npos);
  CHECK(thermoq_evolve_csv(c.p, &csv) == THERMOQ_OK);
  CHECK(take(csv).find("t,P_00") != std::string::npos);
  CHECK(std::string(thermoq_version()) == "0.1.0");
}
