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

#include "thermoq/bosonic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "thermoq/errors.hpp"

namespace thermoq {

void BosonicCoupling::validate() const {
  for (double g : {gamma_c, gamma_r, gamma_h}) {
    if (!std::isfinite(g) || !(g > 0.0)) throw ValidationError("bosonic couplings must be positive and finite");
  }
}

double BosonicCoupling::of(Bath b) const {
  switch (b) {
    case Bath::cold: return gamma_c;
    case Bath::sink: return gamma_r;
    case Bath::hot: return gamma_h;
  }
  return 0.0;
}

double occupation(double energy, double beta) {
  const double x = beta * energy;
  if (!(x > 0.0)) throw ValidationError("bosonic occupation needs a finite temperature and positive energy");
  return 1.0 / std::expm1(x);
}

DecayRates decay_rates(double gamma, double energy, double beta) {
  const double down = gamma * energy * energy * energy * (1.0 + occupation(energy, beta));
  return {down, std::exp(-beta * energy) * down};
}

JumpPair jump_operators(const Machine& machine, Bath b) {
  Operator raise = machine.raising(b);
  Operator lower = raise.adjoint();
  return {std::move(raise), std::move(lower)};
}

std::array<JumpPair, 3> jump_operators(const FridgeSpec& spec) {
  const Machine m = two_qubit_machine(spec);
  return {jump_operators(m, Bath::cold), jump_operators(m, Bath::sink), jump_operators(m, Bath::hot)};
}

namespace {

// L rho L^dagger - {L^dagger L, rho} / 2
Matrix dissipator(const Matrix& l, const Matrix& rho) {
  const Matrix ldl = l.adjoint() * l;
  return l * rho * l.adjoint() - 0.5 * (ldl * rho + rho * ldl);
}

}  // namespace

LindbladGenerator::LindbladGenerator(Machine machine, BathTriple baths, BosonicCoupling coupling)
    : Generator(std::move(machine), baths),
      coupling_(coupling),
      rates_{},
      jumps_{} {
  coupling_.validate();
  for (Bath b : kAllBaths) {
    const auto i = static_cast<std::size_t>(b);
    rates_[i] = decay_rates(coupling_.of(b), this->machine().coupling(b).energy, this->baths().beta(b));
    jumps_[i] = jump_operators(this->machine(), b);
  }
  assemble();
}

Matrix LindbladGenerator::rhs(const Matrix& rho) const {
  Matrix out = free_evolution(machine(), rho);
  for (Bath b : kAllBaths) {
    const auto i = static_cast<std::size_t>(b);
    out += rates_[i].down * dissipator(jumps_[i].lower.matrix(), rho);
    out += rates_[i].up * dissipator(jumps_[i].raise.matrix(), rho);
  }
  return out;
}

double LindbladGenerator::heat_current(const Matrix& rho, Bath b) const {
  const auto i = static_cast<std::size_t>(b);
  const Matrix& sp = jumps_[i].raise.matrix();
  const Matrix& sm = jumps_[i].lower.matrix();
  // sigma_- sigma_+ projects on the lower levels, sigma_+ sigma_- on the upper ones.
  const double p_lower = (sm * sp * rho).trace().real();
  const double p_upper = (sp * sm * rho).trace().real();
  const double into_machine =
      machine().coupling(b).energy * (rates_[i].up * p_lower - rates_[i].down * p_upper);
  return b == Bath::sink ? -into_machine : into_machine;
}

std::optional<std::vector<double>> LindbladGenerator::closed_form_populations() const {
  if (machine().name != "two-qubit") return std::nullopt;
  // The collision closed form depends only on ratios of the per-bath rates,
  // so p_a = Gamma_a / r_a reproduces the bosonic stationary state.
  const Machine& m = machine();
  const closed_form::BathPopulations r{
      bath_population(m.coupling(Bath::cold).energy, baths().beta_c()).r,
      bath_population(m.coupling(Bath::sink).energy, baths().beta_r()).r,
      bath_population(m.coupling(Bath::hot).energy, baths().beta_h()).r,
  };
  const CouplingRates p{rates(Bath::cold).down / r.r_c, rates(Bath::sink).down / r.r_r,
                        rates(Bath::hot).down / r.r_h};
  const auto pops = closed_form::steady_populations(r, p);
  return std::vector<double>(pops.begin(), pops.end());
}

double LindbladGenerator::min_rate() const {
  double lo = rates_[0].up;
  for (const DecayRates& d : rates_) lo = std::min({lo, d.up, d.down});
  return lo;
}

double LindbladGenerator::max_rate() const {
  double hi = 0.0;
  for (const DecayRates& d : rates_) hi = std::max({hi, d.up, d.down});
  return hi;
}

std::string LindbladGenerator::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "model=bosonic machine=" << machine().name << " levels=[";
  for (std::size_t i = 0; i < machine().levels.size(); ++i) os << (i ? "," : "") << machine().levels[i];
  os << "] T_c=" << baths().t_c << " T_r=" << baths().t_r << " T_h=" << baths().t_h
     << " gamma_c=" << coupling_.gamma_c << " gamma_r=" << coupling_.gamma_r
     << " gamma_h=" << coupling_.gamma_h;
  return os.str();
}

LindbladGenerator make_lindblad_generator(const FridgeSpec& spec, const BathTriple& baths,
                                          const BosonicCoupling& coupling) {
  return LindbladGenerator(two_qubit_machine(spec), baths, coupling);
}

BosonicCoupling equivalence_map(const CouplingRates& rates, const BathTriple& baths,
                                const FridgeSpec& spec) {
  rates.validate();
  baths.validate();
  spec.validate();
  auto gamma = [&](Bath b) {
    const double e = spec.transition_energy(b);
    const BathQubit q = bath_population(e, baths.beta(b));
    return rates.of(b) * q.r / (e * e * e * (1.0 + occupation(e, baths.beta(b))));
  };
  return {gamma(Bath::cold), gamma(Bath::sink), gamma(Bath::hot)};
}

}  // namespace thermoq
