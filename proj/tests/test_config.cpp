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

#include "doctest.h"
#include "thermoq/config.hpp"
#include "thermoq/errors.hpp"

using namespace thermoq;

TEST_CASE("defaults are the case study") {
  const RunConfig c;
  CHECK(c.spec.e2 == 2.0);
  CHECK(c.baths.t_r == 1.1);
  CHECK_NOTHROW(c.validate());
  CHECK(c.resolved_t_final() == 100.0);
}

TEST_CASE("field aliases") {
  CHECK(canonical_field("th") == "T_h");
  CHECK(canonical_field("T_h") == "T_h");
  CHECK(canonical_field("e2") == "E2");
  CHECK(canonical_field("pc") == "p_c");
  CHECK_THROWS_AS(canonical_field("nonsense"), ValidationError);
}

TEST_CASE("json merge reports file and line") {
  RunConfig c;
  merge_json(c, "{\n  \"E2\": 3.5,\n  \"T_h\": 50\n}", "run.json");
  CHECK(c.spec.e2 == 3.5);
  CHECK(c.baths.t_h == 50.0);
  CHECK(c.origin.at("T_h") == "run.json:3");

  RunConfig bad;
  merge_json(bad, "{\n  \"E1\": 1,\n  \"E2\": 0.5\n}", "run.json");
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("run.json:3: field 'E2': E2 must exceed E1"), ValidationError);

  RunConfig typed;
  CHECK_THROWS_WITH_AS(merge_json(typed, "{\n\"T_c\": \"cold\"}", "x.json"), doctest::Contains("x.json:2"), ValidationError);
  CHECK_THROWS_WITH_AS(merge_json(typed, "{\n\n  \"T_c\": 1,,}", "y.json"), doctest::Contains("y.json:3"), ValidationError);
  CHECK_THROWS_AS(merge_json(typed, "{\"unknown\": 1}"), ValidationError);
}

TEST_CASE("sweep specs") {
  const SweepSpec s = SweepSpec::parse("th:1:100:3:log");
  CHECK(s.parameter == "T_h");
  CHECK(s.log);
  const auto g = s.grid();
  REQUIRE(g.size() == 3);
  CHECK(g[1] == doctest::Approx(10.0));
  CHECK(g.back() == 100.0);
  CHECK_THROWS_AS(SweepSpec::parse("T_h:1:100"), ValidationError);
  CHECK_THROWS_AS(SweepSpec::parse("T_h:5:1:10").validate(), ValidationError);
  CHECK_THROWS_AS(SweepSpec::parse("T_h:1:5:1").validate(), ValidationError);
  CHECK_THROWS_AS(SweepSpec::parse("T_h:0:5:4:log").validate(), ValidationError);
  CHECK(SweepSpec::parse(s.to_string()).grid() == g);
}

TEST_CASE("gamma fields must come together") {
  RunConfig c;
  set_field(c, "gamma_c", 0.5);
  CHECK_THROWS_AS(c.validate(), ValidationError);
  set_field(c, "gamma_r", 0.5);
  set_field(c, "gamma_h", 0.5);
  CHECK_NOTHROW(c.validate());
  CHECK(get_field(c, "gamma_h") == 0.5);
}

TEST_CASE("to_json round trip") {
  RunConfig c;
  set_field(c, "model", "compare");
  set_field(c, "T_h", "33");
  set_field(c, "sweep", "E2:1.5:6:10");
  RunConfig back;
  merge_json(back, to_json(c), "echo");
  CHECK(back.model == ModelKind::compare);
  CHECK(back.baths.t_h == 33.0);
  REQUIRE(back.sweep.has_value());
  CHECK(back.sweep->count == 10);
  CHECK(to_json(back) == to_json(c));
}

TEST_CASE("bracket validation") {
  RunConfig c;
  set_field(c, "bracket", "0.5:10");
  CHECK_THROWS_AS(c.validate(), ValidationError);
  set_field(c, "bracket", "1.5:10");
  CHECK_NOTHROW(c.validate());
}
