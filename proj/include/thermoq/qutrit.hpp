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

#include <string_view>

#include "thermoq/collision.hpp"
#include "thermoq/solve.hpp"

namespace thermoq {

// Three-level comparison fridge built from a two-qubit design: levels
// (0, 2 E1, E1+E2), cold gap 2 E1, hot gap E2-E1, sink gap E1+E2.
struct QutritSpec {
  double e1;
  double e2;

  static QutritSpec from(const FridgeSpec& spec);
  Machine machine() const;
  double cold_gap() const { return 2.0 * e1; }
  double hot_gap() const { return e2 - e1; }
  double sink_gap() const { return e1 + e2; }
  // Inverse virtual temperature of the cold transition, set by the sink and hot baths.
  double virtual_beta(const BathTriple& baths) const;
};

// Collision-model qutrit with the two-qubit fridge's rates; p_c is multiplied by
// pc_scale (1 reproduces the equal-rate convention).
CollisionGenerator qutrit_generator(const QutritSpec& spec, const BathTriple& baths,
                                    const CouplingRates& rates, double pc_scale = 1.0);

enum class Winner { two_qubit, qutrit, tie };

std::string_view winner_name(Winner w);

inline constexpr double kTieTol = 1e-10;

struct ComparisonReport {
  double q_c_two_qubit;
  double q_c_qutrit;
  Winner winner;
  FridgeSpec spec;
  BathTriple baths;
  CouplingRates rates;
  double pc_scale;
};

ComparisonReport compare(const FridgeSpec& spec, const BathTriple& baths, const CouplingRates& rates,
                         double pc_scale = 1.0);

}  // namespace thermoq
