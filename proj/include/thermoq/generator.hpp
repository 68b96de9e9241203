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
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "thermoq/fridge_model.hpp"
#include "thermoq/machine.hpp"
#include "thermoq/opcore.hpp"

namespace thermoq {

// Markovian generator d(rho)/dt = rhs(rho) for a machine coupled to three baths.
// Immutable after construction.
class Generator {
 public:
  virtual ~Generator() = default;

  // "collision" or "bosonic".
  virtual std::string_view model() const = 0;
  virtual Matrix rhs(const Matrix& rho) const = 0;
  // Energy per unit time absorbed from bath b (sink: delivered to the bath).
  // No stationarity check; see thermoq::heat_current.
  virtual double heat_current(const Matrix& rho, Bath b) const = 0;
  // Closed-form stationary populations where the model has one.
  virtual std::optional<std::vector<double>> closed_form_populations() const { return std::nullopt; }
  // Slowest and fastest bath rates, for integrator defaults.
  virtual double min_rate() const = 0;
  virtual double max_rate() const = 0;
  // One-line parameter dump for diagnostics.
  virtual std::string describe() const = 0;

  const Machine& machine() const { return machine_; }
  const BathTriple& baths() const { return baths_; }
  std::size_t dim() const { return machine_.dim(); }
  // Superoperator on column-stacked vec(rho), dim^2 x dim^2.
  const Matrix& liouvillian() const { return liouvillian_; }
  // Population block of the Liouvillian: W(k, l) = rate l -> k, columns sum to 0.
  const Eigen::MatrixXd& rate_matrix() const { return rates_; }

 protected:
  Generator(Machine machine, BathTriple baths);
  // Derived constructors call this once rhs() is usable.
  void assemble();

 private:
  Machine machine_;
  BathTriple baths_;
  Matrix liouvillian_;
  Eigen::MatrixXd rates_;
};

// i[rho, H0] for a diagonal H0.
Matrix free_evolution(const Machine& machine, const Matrix& rho);

}  // namespace thermoq
