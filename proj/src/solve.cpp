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

#include "thermoq/solve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "thermoq/errors.hpp"

namespace thermoq {

Generator::Generator(Machine machine, BathTriple baths)
    : machine_(std::move(machine)), baths_(baths) {
  machine_.validate();
  baths_.validate();
}

void Generator::assemble() {
  const auto n = static_cast<Eigen::Index>(dim());
  liouvillian_ = Matrix::Zero(n * n, n * n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      Matrix unit = Matrix::Zero(n, n);
      unit(r, c) = 1.0;
      const Matrix image = rhs(unit);
      liouvillian_.col(r + c * n) = Eigen::Map<const Vector>(image.data(), n * n);
    }
  }
  rates_.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = 0; l < n; ++l) rates_(k, l) = liouvillian_(k + k * n, l + l * n).real();
  }
}

Matrix free_evolution(const Machine& machine, const Matrix& rho) {
  // i[rho, H0] with H0 diagonal: entry (k,l) picks up i (E_l - E_k).
  Matrix out = rho;
  for (Eigen::Index k = 0; k < rho.rows(); ++k) {
    for (Eigen::Index l = 0; l < rho.cols(); ++l) {
      const double gap = machine.levels[static_cast<std::size_t>(l)] - machine.levels[static_cast<std::size_t>(k)];
      out(k, l) = complex(0.0, gap) * rho(k, l);
    }
  }
  return out;
}

namespace {

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

double residual_norm(const Generator& gen, const Matrix& rho) { return gen.rhs(rho).norm(); }

}  // namespace

std::vector<double> rate_matrix_populations(const Generator& gen) {
  Eigen::MatrixXd a = gen.rate_matrix();
  const Eigen::Index n = a.rows();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  // The columns of W sum to zero, so one balance row is redundant; trade it for normalisation.
  a.row(0).setOnes();
  b(0) = 1.0;
  const Eigen::VectorXd p = a.fullPivLu().solve(b);
  return {p.data(), p.data() + n};
}

HeatCurrents heat_currents(const Generator& gen, const Matrix& rho) {
  return {gen.heat_current(rho, Bath::cold), gen.heat_current(rho, Bath::hot),
          gen.heat_current(rho, Bath::sink)};
}

double heat_current(const Generator& gen, const DensityOperator& rho, Bath b) {
  const double res = residual_norm(gen, rho.matrix());
  if (!(res < kStationaryTol)) {
    std::ostringstream os;
    os << "heat_current: state is not stationary (residual " << res << ")";
    throw ValidationError(os.str());
  }
  return gen.heat_current(rho.matrix(), b);
}

SteadyStateReport steady_state(const Generator& gen) {
  const auto n = static_cast<Eigen::Index>(gen.dim());
  const Matrix& l = gen.liouvillian();
  Eigen::JacobiSVD<Matrix> svd(l, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double threshold = 1e-10 * std::max(sv(0), std::numeric_limits<double>::min());
  const auto nullity = (sv.array() <= threshold).count();
  if (nullity != 1) {
    std::ostringstream os;
    os << "degenerate generator: null space dimension " << nullity << " (expected 1); "
       << gen.describe();
    throw DegenerateGeneratorError(os.str());
  }

  const Vector v = svd.matrixV().col(n * n - 1);
  Matrix rho = Eigen::Map<const Matrix>(v.data(), n, n);
  rho /= rho.trace();
  rho = hermitize(rho);

  double coherence = 0.0;
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      if (r != c) coherence = std::max(coherence, std::abs(rho(r, c)));
    }
  }
  if (coherence >= kStationaryTol) {
    std::ostringstream os;
    os << "stationary state is not diagonal (max coherence " << coherence << "); " << gen.describe();
    throw DegenerateGeneratorError(os.str());
  }

  DensityOperator state(rho);
  const std::vector<double> pops = state.populations();
  const std::vector<double> fast = rate_matrix_populations(gen);
  double fast_dev = 0.0;
  for (std::size_t i = 0; i < pops.size(); ++i) fast_dev = std::max(fast_dev, std::abs(pops[i] - fast[i]));

  const BathTriple& baths = gen.baths();
  const Machine& machine = gen.machine();
  const HeatCurrents q = heat_currents(gen, rho);
  const double r1 = machine.cold_ground_population(pops);
  const double r_c = bath_population(machine.coupling(Bath::cold).energy, baths.beta_c()).r;

  SteadyStateReport report{
      std::string(gen.model()),
      machine.name,
      state,
      r1,
      r_c,
      q,
      q.q_h == 0.0 ? std::numeric_limits<double>::quiet_NaN() : q.q_c / q.q_h,
      r1 - r_c > kStationaryTol,
      residual_norm(gen, rho),
      coherence,
      baths.beta_r() * q.q_r - baths.beta_c() * q.q_c - baths.beta_h() * q.q_h,
      fast_dev,
      std::nullopt,
  };
  if (auto closed = gen.closed_form_populations()) {
    double dev = 0.0;
    for (std::size_t i = 0; i < pops.size(); ++i) dev = std::max(dev, std::abs(pops[i] - (*closed)[i]));
    report.closed_form_deviation = dev;
  }
  return report;
}

Trajectory evolve(const Generator& gen, const DensityOperator& rho0, const EvolveOptions& options) {
  if (rho0.dim() != gen.dim()) throw ValidationError("evolve: initial state dimension mismatch");
  if (!(options.t_final >= 0.0) || !std::isfinite(options.t_final)) {
    throw ValidationError("evolve: t_final must be finite and non-negative");
  }
  if (options.dt < 0.0) throw ValidationError("evolve: dt must be positive");

  const auto& levels = gen.machine().levels;
  const double span = *std::max_element(levels.begin(), levels.end()) -
                      *std::min_element(levels.begin(), levels.end());
  double dt = options.dt > 0.0 ? options.dt : 0.01 / std::max(gen.max_rate(), span);
  const double emit = options.emit_interval > 0.0 ? options.emit_interval : 1.0 / gen.min_rate();

  StateTolerance tol;
  tol.min_eigenvalue = options.min_eigenvalue;

  Trajectory traj;
  traj.times.push_back(0.0);
  traj.states.push_back(rho0);

  auto rk4 = [&](Matrix rho, double interval, double step) {
    const auto steps = static_cast<long>(std::ceil(interval / step - 1e-9));
    const double h = interval / static_cast<double>(std::max(steps, 1L));
    for (long s = 0; s < std::max(steps, 1L); ++s) {
      const Matrix k1 = gen.rhs(rho);
      const Matrix k2 = gen.rhs(rho + 0.5 * h * k1);
      const Matrix k3 = gen.rhs(rho + 0.5 * h * k2);
      const Matrix k4 = gen.rhs(rho + h * k3);
      rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      rho = hermitize(rho);
    }
    return rho;
  };

  double t = 0.0;
  int halvings = 0;
  while (t < options.t_final - 1e-12 * std::max(1.0, options.t_final)) {
    const double interval = std::min(emit, options.t_final - t);
    std::optional<DensityOperator> next;
    while (!next) {
      try {
        next.emplace(rk4(traj.states.back().matrix(), interval, dt), tol);
      } catch (const ValidationError& e) {
        if (++halvings > options.max_halvings) {
          std::ostringstream os;
          os << "evolve: state left the physical set at t=" << t + interval << " after "
             << options.max_halvings << " step halvings (dt=" << dt << "): " << e.what() << "; "
             << gen.describe();
          throw IntegrationError(os.str());
        }
        dt *= 0.5;
      }
    }
    t += interval;
    const double change = trace_distance(next->matrix(), traj.states.back().matrix());
    traj.times.push_back(t);
    traj.states.push_back(std::move(*next));
    if (change < options.convergence_tol && interval >= emit * (1.0 - 1e-12)) {
      traj.converged = true;
      if (options.stop_when_converged) break;
    }
  }
  traj.dt_used = dt;
  return traj;
}

}  // namespace thermoq
