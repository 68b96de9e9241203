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

#include "thermoq/machine.hpp"

#include <cmath>
#include <sstream>

#include "thermoq/errors.hpp"

namespace thermoq {

const Coupling& Machine::coupling(Bath b) const {
  for (const Coupling& c : couplings) {
    if (c.bath == b) return c;
  }
  throw ValidationError(name + ": no coupling to bath " + std::string(bath_name(b)));
}

Operator Machine::upper_projector(Bath b) const {
  Operator out = Operator::zero(dim());
  for (const Transition& t : coupling(b).transitions) out += Operator::projector(t.upper, dim());
  return out;
}

Operator Machine::lower_projector(Bath b) const {
  Operator out = Operator::zero(dim());
  for (const Transition& t : coupling(b).transitions) out += Operator::projector(t.lower, dim());
  return out;
}

Operator Machine::raising(Bath b) const {
  Operator out = Operator::zero(dim());
  for (const Transition& t : coupling(b).transitions) out += Operator::ket_bra(t.upper, t.lower, dim());
  return out;
}

double Machine::cold_ground_population(const std::vector<double>& populations) const {
  double lower = 0.0, upper = 0.0;
  for (const Transition& t : coupling(Bath::cold).transitions) {
    lower += populations.at(t.lower);
    upper += populations.at(t.upper);
  }
  return lower / (lower + upper);
}

void Machine::validate() const {
  if (labels.size() != levels.size()) throw ValidationError(name + ": label count mismatch");
  for (const Coupling& c : couplings) {
    if (!(c.energy > 0.0)) throw ValidationError(name + ": bath qubit energy must be positive");
    for (const Transition& t : c.transitions) {
      if (t.lower >= dim() || t.upper >= dim() || t.lower == t.upper) {
        throw ValidationError(name + ": transition outside the level set");
      }
      const double gap = levels[t.upper] - levels[t.lower];
      if (std::abs(gap - c.energy) > 1e-12 * std::max(1.0, std::abs(c.energy))) {
        std::ostringstream os;
        os << name << ": bath " << bath_name(c.bath) << " qubit energy " << c.energy
           << " is off resonance with transition " << labels[t.lower] << "->" << labels[t.upper]
           << " (gap " << gap << ")";
        throw ValidationError(os.str());
      }
    }
  }
}

Machine two_qubit_machine(const FridgeSpec& spec) {
  spec.validate();
  using basis::two_qubit_index;
  const std::size_t s00 = two_qubit_index(0, 0);
  const std::size_t s10 = two_qubit_index(1, 0);
  const std::size_t s01 = two_qubit_index(0, 1);
  const std::size_t s11 = two_qubit_index(1, 1);

  Machine m;
  m.name = "two-qubit";
  m.levels = {0.0, spec.e1, spec.e2, spec.e1 + spec.e2};
  m.labels = {"00", "10", "01", "11"};
  m.couplings = {
      {Bath::cold, {{s00, s10}, {s01, s11}}, spec.transition_energy(Bath::cold)},
      {Bath::sink, {{s00, s11}}, spec.transition_energy(Bath::sink)},
      {Bath::hot, {{s10, s01}}, spec.transition_energy(Bath::hot)},
  };
  m.validate();
  return m;
}

Machine qutrit_machine(const FridgeSpec& spec) {
  spec.validate();
  Machine m;
  m.name = "qutrit";
  m.levels = {0.0, 2.0 * spec.e1, spec.e1 + spec.e2};
  m.labels = {"0", "1", "2"};
  m.couplings = {
      {Bath::cold, {{0, 1}}, 2.0 * spec.e1},
      {Bath::sink, {{0, 2}}, spec.e1 + spec.e2},
      {Bath::hot, {{1, 2}}, spec.e2 - spec.e1},
  };
  m.validate();
  return m;
}

}  // namespace thermoq
