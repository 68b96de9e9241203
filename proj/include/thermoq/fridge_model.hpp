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

#include <array>
#include <optional>
#include <string_view>

namespace thermoq {

// Shared tolerance at the cooling boundary beta_V = beta_c.
inline constexpr double kBoundaryTol = 1e-12;

enum class Bath { cold, sink, hot };

inline constexpr std::array<Bath, 3> kAllBaths{Bath::cold, Bath::sink, Bath::hot};

std::string_view bath_name(Bath b);  // "c", "r", "h"

// Two-qubit machine design: qubit 1 gap e1 (the cooled qubit), qubit 2 gap e2 > e1.
struct FridgeSpec {
  double e1 = 1.0;
  double e2 = 2.0;

  void validate() const;
  // Energy of the machine transition coupled to bath b.
  double transition_energy(Bath b) const;
};

// Reservoir temperatures, 0 < t_c <= t_r <= t_h.
struct BathTriple {
  double t_c = 1.0;
  double t_r = 1.1;
  double t_h = 20.0;

  void validate() const;
  double temperature(Bath b) const;
  double beta(Bath b) const { return 1.0 / temperature(b); }
  double beta_c() const { return 1.0 / t_c; }
  double beta_r() const { return 1.0 / t_r; }
  double beta_h() const { return 1.0 / t_h; }
};

// Thermal qubit drawn from a bath: ground population r, excited population rbar.
struct BathQubit {
  double energy;
  double beta;
  double r;
  double rbar;
};

BathQubit bath_population(double energy, double beta);
// Bath qubit resonant with the fridge transition coupled to bath b.
BathQubit bath_qubit(const FridgeSpec& spec, const BathTriple& baths, Bath b);

struct Stroke {
  int from;  // index in the (|00>,|10>,|01>,|11>) ordering
  int to;
  Bath bath;
  double absorbed;  // energy absorbed by the fridge; negative when dumped
};

struct CycleLedger {
  std::array<Stroke, 4> strokes;
  double q_c;  // net heat from the cold bath per cycle
  double q_h;  // net heat from the hot bath per cycle
  double q_r;  // net heat dumped into the sink per cycle
};

CycleLedger cycle_ledger(const FridgeSpec& spec);

struct VirtualTemperature {
  double beta;
  bool positive() const { return beta > 0.0; }
  // Only meaningful when positive().
  std::optional<double> temperature() const {
    if (!positive()) return std::nullopt;
    return 1.0 / beta;
  }
};

VirtualTemperature virtual_temperature(const FridgeSpec& spec, const BathTriple& baths);
inline double virtual_beta(const FridgeSpec& spec, const BathTriple& baths) {
  return virtual_temperature(spec, baths).beta;
}

// beta_V exceeds beta_c by more than kBoundaryTol.
bool cooling_predicate(const FridgeSpec& spec, const BathTriple& baths);

// Total entropy change of one cooling cycle (reservoirs only).
double cycle_entropy(const FridgeSpec& spec, const BathTriple& baths);
// Same sign test as cooling_predicate, phrased on the entropy change.
bool entropy_predicts_cooling(const FridgeSpec& spec, const BathTriple& baths);

struct Efficiency {
  double from_energies;  // 2 e1 / (e2 - e1)
  double from_temperatures;  // (beta_r - beta_h) / (beta_V - beta_r)
};

double efficiency(const FridgeSpec& spec);
Efficiency efficiency(const FridgeSpec& spec, const BathTriple& baths);

// (beta_r - beta_h) / (beta_c - beta_r); +inf when t_c == t_r.
double carnot_efficiency(const BathTriple& baths);

// e2 at which beta_V = beta_c for fixed e1 and temperatures, or nullopt when no
// e2 > e1 reaches the cold inverse temperature.
std::optional<double> carnot_e2(double e1, const BathTriple& baths);

}  // namespace thermoq
