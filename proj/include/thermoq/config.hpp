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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thermoq/bosonic.hpp"
#include "thermoq/collision.hpp"
#include "thermoq/fridge_model.hpp"

namespace thermoq {

enum class ModelKind { collision, bosonic, qutrit, compare };

std::string_view model_name(ModelKind m);
ModelKind parse_model(std::string_view name);

// Declarative one-parameter scan: "name:min:max:count[:log]".
struct SweepSpec {
  std::string parameter;  // canonical field name, e.g. "T_h"
  double min = 0.0;
  double max = 0.0;
  int count = 0;
  bool log = false;

  static SweepSpec parse(std::string_view text);
  void validate() const;
  std::vector<double> grid() const;
  std::string to_string() const;
};

// Fully resolved experiment record. Defaults are the case study
// (E1=1, E2=2, T_c=1, T_r=1.1, T_h=20, p_c=p_r=p_h=1).
struct RunConfig {
  ModelKind model = ModelKind::collision;
  FridgeSpec spec{1.0, 2.0};
  BathTriple baths{1.0, 1.1, 20.0};
  CouplingRates rates{1.0, 1.0, 1.0};
  // Absent: derived from `rates` with equivalence_map.
  std::optional<BosonicCoupling> bosonic;
  double qutrit_pc_scale = 1.0;
  double t_final = 0.0;  // 0: 100 / min rate
  double dt = 0.0;  // 0: integrator default
  std::optional<SweepSpec> sweep;
  double bracket_lo = 0.0;  // 0: E1 + 1e-6
  double bracket_hi = 12.0;
  std::uint64_t seed = 0;
  int search_draws = 200;

  // Where each field was last set ("run.json:4", "--e2"); used in error messages.
  std::map<std::string, std::string> origin;

  // Throws ValidationError naming the offending field.
  void validate() const;
  BosonicCoupling resolved_bosonic() const;
  double resolved_t_final() const;
  double resolved_bracket_lo() const;
};

// Canonical field name for a user-supplied key ("th", "T_h", "t-h" -> "T_h").
std::string canonical_field(std::string_view key);

// Assigns one field from its textual value. Does not validate cross-field invariants.
void set_field(RunConfig& config, std::string_view key, std::string_view value);
void set_field(RunConfig& config, std::string_view key, double value);
double get_field(const RunConfig& config, std::string_view key);

// Merges a JSON document into `config`. Errors carry "<source>:<line>: field '<name>': ...".
void merge_json(RunConfig& config, std::string_view json_text, std::string_view source = "<config>");
RunConfig load_run_config(const std::string& path);

std::string to_json(const RunConfig& config);

}  // namespace thermoq
