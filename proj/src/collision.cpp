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

#include "thermoq/collision.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "thermoq/errors.hpp"

namespace thermoq {

void CouplingRates::validate() const {
  for (double p : {p_c, p_r, p_h}) {
    if (!std::isfinite(p) || !(p > 0.0)) throw ValidationError("coupling rates must be positive and finite");
  }
}

double CouplingRates::of(Bath b) const {
  switch (b) {
    case Bath::cold: return p_c;
    case Bath::sink: return p_r;
    case Bath::hot: return p_h;
  }
  return 0.0;
}

double CouplingRates::min() const { return std::min({p_c, p_r, p_h}); }
double CouplingRates::max() const { return std::max({p_c, p_r, p_h}); }

InteractionSpec interaction_spec(const Machine& machine, Bath b, double strength) {
  const Coupling& c = machine.coupling(b);
  return {b, c.transitions, c.energy, strength};
}

namespace {

void check_spec(const Machine& machine, const InteractionSpec& spec) {
  if (!std::isfinite(spec.strength) || spec.strength < 0.0) {
    throw ValidationError("interaction strength must be finite and non-negative");
  }
  for (const Transition& t : spec.transitions) {
    if (t.lower >= machine.dim() || t.upper >= machine.dim()) {
      throw ValidationError("interaction transition outside the machine");
    }
    const double gap = machine.levels[t.upper] - machine.levels[t.lower];
    if (std::abs(gap - spec.bath_energy) > 1e-12 * std::max(1.0, std::abs(spec.bath_energy))) {
      std::ostringstream os;
      os << "off-resonant interaction: bath " << bath_name(spec.bath) << " qubit energy "
         << spec.bath_energy << " vs transition gap " << gap;
      throw ValidationError(os.str());
    }
  }
}

}  // namespace

Operator interaction_hamiltonian(const Machine& machine, const InteractionSpec& spec) {
  check_spec(machine, spec);
  const std::size_t n = machine.dim();
  Matrix h = Matrix::Zero(static_cast<Eigen::Index>(2 * n), static_cast<Eigen::Index>(2 * n));
  const Matrix bath_up = Operator::ket_bra(1, 0, 2).matrix();
  for (const Transition& t : spec.transitions) {
    h += spec.strength * kron(Operator::ket_bra(t.lower, t.upper, n).matrix(), bath_up);
  }
  h += h.adjoint().eval();
  return Operator(std::move(h));
}

DensityOperator bath_state(const BathQubit& q) {
  const std::array<double, 2> p{q.r, q.rbar};
  return DensityOperator::from_populations(p);
}

Matrix time_averaged_map(const Machine& machine, const InteractionSpec& spec,
                         const DensityOperator& tau, const Matrix& rho) {
  if (!(spec.strength > 0.0)) throw ValidationError("time-averaged map needs a positive strength");
  if (tau.dim() != 2) throw ValidationError("bath state must be a qubit");
  if (static_cast<std::size_t>(rho.rows()) != machine.dim()) {
    throw ValidationError("time_averaged_map: state dimension mismatch");
  }
  const Operator h = interaction_hamiltonian(machine, spec);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
  const Eigen::VectorXd& w = es.eigenvalues();
  const Matrix& v = es.eigenvectors();

  // The swap spectrum is {0, +-g}, so every Bohr frequency is an integer
  // multiple of g and averages to zero over one period unless it vanishes.
  Matrix y = v.adjoint() * kron(rho, tau.matrix()) * v;
  const double cut = 1e-8 * spec.strength;
  for (Eigen::Index a = 0; a < y.rows(); ++a) {
    for (Eigen::Index b = 0; b < y.cols(); ++b) {
      if (std::abs(w(a) - w(b)) > cut) y(a, b) = 0.0;
    }
  }
  const std::array<std::size_t, 2> dims{machine.dim(), 2};
  const std::array<std::size_t, 1> keep{0};
  return partial_trace(Matrix(v * y * v.adjoint()), keep, dims);
}

DensityOperator time_averaged_map(const Machine& machine, const InteractionSpec& spec,
                                  const DensityOperator& tau, const DensityOperator& rho) {
  Matrix out = time_averaged_map(machine, spec, tau, rho.matrix());
  return DensityOperator(0.5 * (out + out.adjoint()));
}

CollisionGenerator::CollisionGenerator(Machine machine, BathTriple baths, CouplingRates rates,
                                       double strength)
    : Generator(std::move(machine), baths), rates_(rates) {
  rates_.validate();
  const Machine& m = this->machine();
  const auto n = static_cast<Eigen::Index>(m.dim());
  for (Bath b : kAllBaths) {
    const InteractionSpec spec = interaction_spec(m, b, strength);
    const DensityOperator tau = bath_state(bath_population(spec.bath_energy, this->baths().beta(b)));
    Matrix& ch = channels_[index(b)];
    ch = Matrix::Zero(n * n, n * n);
    for (Eigen::Index c = 0; c < n; ++c) {
      for (Eigen::Index r = 0; r < n; ++r) {
        Matrix unit = Matrix::Zero(n, n);
        unit(r, c) = 1.0;
        const Matrix image = time_averaged_map(m, spec, tau, unit);
        ch.col(r + c * n) = Eigen::Map<const Vector>(image.data(), n * n);
      }
    }
  }
  assemble();
}

Matrix CollisionGenerator::apply_channel(Bath b, const Matrix& rho) const {
  const Eigen::Index n = rho.rows();
  const Vector out = channel(b) * Eigen::Map<const Vector>(rho.data(), n * n);
  return Eigen::Map<const Matrix>(out.data(), n, n);
}

Matrix CollisionGenerator::rhs(const Matrix& rho) const {
  Matrix out = free_evolution(machine(), rho);
  for (Bath b : kAllBaths) out += rates_.of(b) * (apply_channel(b, rho) - rho);
  return out;
}

double CollisionGenerator::heat_current(const Matrix& rho, Bath b) const {
  const Coupling& c = machine().coupling(b);
  const Matrix delta = apply_channel(b, rho) - rho;
  const double gain = (delta * machine().upper_projector(b).matrix()).trace().real();
  const double into_machine = rates_.of(b) * c.energy * gain;
  return b == Bath::sink ? -into_machine : into_machine;
}

std::optional<std::vector<double>> CollisionGenerator::closed_form_populations() const {
  if (machine().name != "two-qubit") return std::nullopt;
  const Machine& m = machine();
  const closed_form::BathPopulations r{
      bath_population(m.coupling(Bath::cold).energy, baths().beta_c()).r,
      bath_population(m.coupling(Bath::sink).energy, baths().beta_r()).r,
      bath_population(m.coupling(Bath::hot).energy, baths().beta_h()).r,
  };
  const auto p = closed_form::steady_populations(r, rates_);
  return std::vector<double>(p.begin(), p.end());
}

std::string CollisionGenerator::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "model=collision machine=" << machine().name << " levels=[";
  for (std::size_t i = 0; i < machine().levels.size(); ++i) os << (i ? "," : "") << machine().levels[i];
  os << "] T_c=" << baths().t_c << " T_r=" << baths().t_r << " T_h=" << baths().t_h
     << " p_c=" << rates_.p_c << " p_r=" << rates_.p_r << " p_h=" << rates_.p_h;
  return os.str();
}

CollisionGenerator make_collision_generator(const FridgeSpec& spec, const BathTriple& baths,
                                            const CouplingRates& rates) {
  return CollisionGenerator(two_qubit_machine(spec), baths, rates);
}

namespace closed_form {

BathPopulations populations_of(const FridgeSpec& spec, const BathTriple& baths) {
  return {bath_qubit(spec, baths, Bath::cold).r, bath_qubit(spec, baths, Bath::sink).r,
          bath_qubit(spec, baths, Bath::hot).r};
}

double cooling_numerator(const BathPopulations& r) {
  const double rc = r.r_c, rr = r.r_r, rh = r.r_h;
  const double bc = 1.0 - rc, br = 1.0 - rr, bh = 1.0 - rh;
  return bc * bc * rr * bh - rc * rc * br * rh;
}

double normalisation(const BathPopulations& r, const CouplingRates& p) {
  const double rc = r.r_c, rr = r.r_r, rh = r.r_h;
  const double bc = 1.0 - rc, br = 1.0 - rr, bh = 1.0 - rh;
  return (1.0 / p.p_c + 1.0 / p.p_r) * (rc * rh + bc * bh) +
         (1.0 / p.p_c + 1.0 / p.p_h) * (rc * br + bc * rr);
}

std::array<double, 4> steady_populations(const BathPopulations& r, const CouplingRates& p) {
  const double rc = r.r_c, rr = r.r_r, rh = r.r_h;
  const double bc = 1.0 - rc, br = 1.0 - rr, bh = 1.0 - rh;
  const double pc = p.p_c, pr = p.p_r, ph = p.p_h;
  const double d = normalisation(r, p);
  return {
      (rc * (rc * rh / pr + bc * rr / ph) + rr * (rc * rh / pc + bc * bh / pc)) / d,
      (bc * (rc * rh / pr + bc * rr / ph) + rh * (rc * br / pc + bc * rr / pc)) / d,
      (rc * (bc * bh / pr + rc * br / ph) + bh * (rc * br / pc + bc * rr / pc)) / d,
      (bc * (bc * bh / pr + rc * br / ph) + br * (rc * rh / pc + bc * bh / pc)) / d,
  };
}

double qubit1_ground_population(const BathPopulations& r, const CouplingRates& p) {
  return r.r_c + 2.0 * cooling_numerator(r) / (p.p_c * normalisation(r, p));
}

double cold_current(const FridgeSpec& spec, const BathPopulations& r, const CouplingRates& p) {
  return spec.e1 * cooling_numerator(r) / normalisation(r, p);
}

}  // namespace closed_form

double q_c_hot_limit(const FridgeSpec& spec, const BathTriple& baths, const CouplingRates& rates) {
  spec.validate();
  rates.validate();
  const double rc = bath_qubit(spec, baths, Bath::cold).r;
  const double rr = bath_qubit(spec, baths, Bath::sink).r;
  const double bc = 1.0 - rc, br = 1.0 - rr;
  const double saturation = (bc * bc * rr - rc * rc * br) /
                            (0.5 * (1.0 / rates.p_c + 1.0 / rates.p_r) +
                             (1.0 / rates.p_c + 1.0 / rates.p_h) * (rc * br + bc * rr));
  // The time-averaged swap moves half the population per collision, hence E1/2.
  return 0.5 * spec.e1 * saturation;
}

}  // namespace thermoq
