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

#include <cstddef>
#include <string>
#include <vector>

#include "thermoq/fridge_model.hpp"
#include "thermoq/opcore.hpp"

namespace thermoq {

// Ordered pair of machine levels, lower energy first.
struct Transition {
  std::size_t lower;
  std::size_t upper;
};

// Bath attachment: the bath's thermal qubits (gap `energy`) swap with every
// listed machine transition.
struct Coupling {
  Bath bath;
  std::vector<Transition> transitions;
  double energy;
};

// Machine with a diagonal free Hamiltonian and resonant bath couplings.
struct Machine {
  std::string name;
  std::vector<double> levels;
  std::vector<std::string> labels;
  std::vector<Coupling> couplings;

  std::size_t dim() const { return levels.size(); }
  Operator hamiltonian() const { return Operator::diagonal(levels); }
  const Coupling& coupling(Bath b) const;
  // Sum of |upper><upper| (resp. |lower><lower|) over the bath's transitions.
  Operator upper_projector(Bath b) const;
  Operator lower_projector(Bath b) const;
  // Sum of |upper><lower| over the bath's transitions.
  Operator raising(Bath b) const;
  // Ground population of the cold transition, normalised to the levels it couples.
  double cold_ground_population(const std::vector<double>& populations) const;
  // Throws ValidationError when a coupling is off resonance.
  void validate() const;
};

// Levels (0, E1, E2, E1+E2) in the (|00>,|10>,|01>,|11>) ordering; cold bath on
// qubit 1, sink on |00><->|11>, hot on |10><->|01>.
Machine two_qubit_machine(const FridgeSpec& spec);

// Three-level comparison fridge with levels (0, 2 E1, E1+E2).
Machine qutrit_machine(const FridgeSpec& spec);

}  // namespace thermoq
