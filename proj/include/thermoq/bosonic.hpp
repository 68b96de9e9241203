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

#include "thermoq/collision.hpp"
#include "thermoq/generator.hpp"

namespace thermoq {

// Bath coupling constants gamma_alpha of the weak-coupling bosonic model.
struct BosonicCoupling {
  double gamma_c = 1.0;
  double gamma_r = 1.0;
  double gamma_h = 1.0;

  void validate() const;
  double of(Bath b) const;
};

// Mean excitation number 1 / (e^{beta E} - 1).
double occupation(double energy, double beta);

struct DecayRates {
  double down;  // Gamma_alpha = gamma E^3 (1 + N)
  double up;  // Gamma_{-alpha} = e^{-beta E} Gamma_alpha
};

DecayRates decay_rates(double gamma, double energy, double beta);

struct JumpPair {
  Operator raise;  // sigma_+
  Operator lower;  // sigma_- = sigma_+^dagger
};

// Jump operators in (cold, sink, hot) order.
std::array<JumpPair, 3> jump_operators(const FridgeSpec& spec);
JumpPair jump_operators(const Machine& machine, Bath b);

// rhs(rho) = i[rho, H0] + sum_a Gamma_a D[sigma_-](rho) + Gamma_{-a} D[sigma_+](rho).
class LindbladGenerator final : public Generator {
 public:
  LindbladGenerator(Machine machine, BathTriple baths, BosonicCoupling coupling);

  std::string_view model() const override { return "bosonic"; }
  Matrix rhs(const Matrix& rho) const override;
  double heat_current(const Matrix& rho, Bath b) const override;
  std::optional<std::vector<double>> closed_form_populations() const override;
  double min_rate() const override;
  double max_rate() const override;
  std::string describe() const override;

  const BosonicCoupling& coupling() const { return coupling_; }
  const DecayRates& rates(Bath b) const { return rates_[static_cast<std::size_t>(b)]; }

 private:
  BosonicCoupling coupling_;
  std::array<DecayRates, 3> rates_;
  std::array<JumpPair, 3> jumps_;
};

LindbladGenerator make_lindblad_generator(const FridgeSpec& spec, const BathTriple& baths,
                                          const BosonicCoupling& coupling);

// gamma_alpha such that Gamma_alpha = p_alpha r_alpha.
BosonicCoupling equivalence_map(const CouplingRates& rates, const BathTriple& baths,
                                const FridgeSpec& spec);

}  // namespace thermoq
