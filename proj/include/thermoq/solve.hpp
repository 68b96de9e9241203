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

#include <optional>
#include <string>
#include <vector>

#include "thermoq/generator.hpp"

namespace thermoq {

inline constexpr double kStationaryTol = 1e-10;

struct HeatCurrents {
  double q_c = 0.0;  // from the cold bath into the machine
  double q_h = 0.0;  // from the hot bath into the machine
  double q_r = 0.0;  // from the machine into the sink
};

struct SteadyStateReport {
  std::string model;
  std::string machine;
  DensityOperator rho;
  double r1;  // ground population of the cooled (cold-coupled) degree of freedom
  double r_c;  // ground population of a cold-bath qubit
  HeatCurrents currents;
  double efficiency_realized;  // Q_c / Q_h; NaN when Q_h vanishes
  bool cooling;
  double residual;  // Frobenius norm of rhs(rho)
  double max_coherence;
  double entropy_production;  // beta_r Q_r - beta_c Q_c - beta_h Q_h
  double rate_path_deviation;  // max |population| difference vs the rate-matrix solve
  std::optional<double> closed_form_deviation;
};

// Stationary state from the null space of the full Liouvillian, checked
// against the population rate matrix and any closed form.
// Throws DegenerateGeneratorError when the null space is not one-dimensional
// or the stationary state carries coherences.
SteadyStateReport steady_state(const Generator& gen);

// Stationary populations from the rate matrix alone.
std::vector<double> rate_matrix_populations(const Generator& gen);

// Rejects states with residual >= kStationaryTol.
double heat_current(const Generator& gen, const DensityOperator& rho, Bath b);
HeatCurrents heat_currents(const Generator& gen, const Matrix& rho);

struct EvolveOptions {
  double t_final = 0.0;
  double dt = 0.0;  // 0: 0.01 / max(rates, level span)
  double emit_interval = 0.0;  // 0: 1 / min rate
  bool stop_when_converged = false;
  double convergence_tol = 1e-8;  // trace distance between successive emitted states
  double min_eigenvalue = -1e-8;
  int max_halvings = 10;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityOperator> states;
  double dt_used = 0.0;
  bool converged = false;
};

// Fixed-step RK4. A state that fails validation at an emission point is
// recomputed with half the step, up to max_halvings times.
Trajectory evolve(const Generator& gen, const DensityOperator& rho0, const EvolveOptions& options);

}  // namespace thermoq
