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

#include "thermoq/qutrit.hpp"

#include <cmath>

#include "thermoq/errors.hpp"

namespace thermoq {

QutritSpec QutritSpec::from(const FridgeSpec& spec) {
  spec.validate();
  return {spec.e1, spec.e2};
}

Machine QutritSpec::machine() const { return qutrit_machine(FridgeSpec{e1, e2}); }

double QutritSpec::virtual_beta(const BathTriple& baths) const {
  return (baths.beta_r() * sink_gap() - baths.beta_h() * hot_gap()) / cold_gap();
}

CollisionGenerator qutrit_generator(const QutritSpec& spec, const BathTriple& baths,
                                    const CouplingRates& rates, double pc_scale) {
  if (!std::isfinite(pc_scale) || !(pc_scale > 0.0)) {
    throw ValidationError("qutrit p_c scale must be positive and finite");
  }
  CouplingRates scaled = rates;
  scaled.p_c *= pc_scale;
  return CollisionGenerator(spec.machine(), baths, scaled);
}

std::string_view winner_name(Winner w) {
  switch (w) {
    case Winner::two_qubit: return "two-qubit";
    case Winner::qutrit: return "qutrit";
    case Winner::tie: return "tie";
  }
  return "?";
}

ComparisonReport compare(const FridgeSpec& spec, const BathTriple& baths, const CouplingRates& rates,
                         double pc_scale) {
  const SteadyStateReport pair = steady_state(make_collision_generator(spec, baths, rates));
  const SteadyStateReport three =
      steady_state(qutrit_generator(QutritSpec::from(spec), baths, rates, pc_scale));
  const double a = pair.currents.q_c;
  const double b = three.currents.q_c;
  Winner w = Winner::tie;
  if (std::abs(a - b) > kTieTol) w = a > b ? Winner::two_qubit : Winner::qutrit;
  return {a, b, w, spec, baths, rates, pc_scale};
}

}  // namespace thermoq
