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
#include <string>
#include <vector>

#include "thermoq/generator.hpp"

namespace thermoq {

// Collision probability per unit time for each bath.
struct CouplingRates {
  double p_c = 1.0;
  double p_r = 1.0;
  double p_h = 1.0;

  void validate() const;
  double of(Bath b) const;
  double min() const;
  double max() const;
};

// Swap interaction between a bath qubit of gap `bath_energy` and the listed
// machine transitions, with strength g.
struct InteractionSpec {
  Bath bath;
  std::vector<Transition> transitions;
  double bath_energy;
  double strength = 1.0;
};

InteractionSpec interaction_spec(const Machine& machine, Bath b, double strength = 1.0);

// g sum_t (|lower><upper| (x) |1><0| + h.c.) on machine (x) bath qubit, machine
// index slow. Rejects off-resonant specs.
Operator interaction_hamiltonian(const Machine& machine, const InteractionSpec& spec);

// Gibbs qubit diag(r, rbar).
DensityOperator bath_state(const BathQubit& q);

// Partial trace over the bath qubit of the swap dynamics averaged over one full
// period 2 pi / g. Linear in rho; the Matrix overload accepts any operator.
Matrix time_averaged_map(const Machine& machine, const InteractionSpec& spec,
                         const DensityOperator& tau, const Matrix& rho);
DensityOperator time_averaged_map(const Machine& machine, const InteractionSpec& spec,
                                  const DensityOperator& tau, const DensityOperator& rho);

// d(rho)/dt = i[rho, H0] + sum_j p_j (Omega_j(rho) - rho).
class CollisionGenerator final : public Generator {
 public:
  CollisionGenerator(Machine machine, BathTriple baths, CouplingRates rates, double strength = 1.0);

  std::string_view model() const override { return "collision"; }
  Matrix rhs(const Matrix& rho) const override;
  double heat_current(const Matrix& rho, Bath b) const override;
  std::optional<std::vector<double>> closed_form_populations() const override;
  double min_rate() const override { return rates_.min(); }
  double max_rate() const override { return rates_.max(); }
  std::string describe() const override;

  const CouplingRates& rates() const { return rates_; }
  // Omega_j as a superoperator on column-stacked vec(rho).
  const Matrix& channel(Bath b) const { return channels_[index(b)]; }
  Matrix apply_channel(Bath b, const Matrix& rho) const;

 private:
  static std::size_t index(Bath b) { return static_cast<std::size_t>(b); }

  CouplingRates rates_;
  std::array<Matrix, 3> channels_;
};

CollisionGenerator make_collision_generator(const FridgeSpec& spec, const BathTriple& baths,
                                            const CouplingRates& rates);

// Closed forms for the two-qubit collision model, written in terms of the bath
// ground populations (r_c, r_r, r_h).
namespace closed_form {

struct BathPopulations {
  double r_c, r_r, r_h;
};

BathPopulations populations_of(const FridgeSpec& spec, const BathTriple& baths);

// rbar_c^2 r_r rbar_h - r_c^2 rbar_r r_h; positive exactly when the fridge cools.
double cooling_numerator(const BathPopulations& r);
// Normalisation D of the stationary populations.
double normalisation(const BathPopulations& r, const CouplingRates& p);
// Stationary populations in (|00>,|10>,|01>,|11>) order.
std::array<double, 4> steady_populations(const BathPopulations& r, const CouplingRates& p);
// r1 = r_c + 2 N / (p_c D).
double qubit1_ground_population(const BathPopulations& r, const CouplingRates& p);
// Q_c = E1 N / D.
double cold_current(const FridgeSpec& spec, const BathPopulations& r, const CouplingRates& p);

}  // namespace closed_form

// Limit of the stationary cold current as T_h -> infinity (r_h = 1/2).
double q_c_hot_limit(const FridgeSpec& spec, const BathTriple& baths, const CouplingRates& rates);

}  // namespace thermoq
