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

#include "thermoq/opcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "thermoq/errors.hpp"

namespace thermoq {

namespace {

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ValidationError(std::string(what) + ": matrix must be square and nonempty");
  }
}

Matrix hermitian_part(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

Operator::Operator(Matrix entries) : m_(std::move(entries)) { require_square(m_, "Operator"); }

Operator Operator::zero(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return Operator(Matrix::Zero(n, n));
}

Operator Operator::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return Operator(Matrix::Identity(n, n));
}

Operator Operator::ket_bra(std::size_t row, std::size_t col, std::size_t dim) {
  if (row >= dim || col >= dim) throw ValidationError("ket_bra: level index out of range");
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix m = Matrix::Zero(n, n);
  m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1.0;
  return Operator(std::move(m));
}

Operator Operator::diagonal(std::span<const double> values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = values[static_cast<std::size_t>(i)];
  return Operator(std::move(m));
}

double Operator::hermiticity_defect() const { return max_abs(m_ - m_.adjoint()); }

bool Operator::is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

Operator& Operator::operator+=(const Operator& o) {
  if (o.dim() != dim()) throw ValidationError("Operator sum: dimension mismatch");
  m_ += o.m_;
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  if (o.dim() != dim()) throw ValidationError("Operator difference: dimension mismatch");
  m_ -= o.m_;
  return *this;
}

DensityOperator::DensityOperator(Matrix entries, StateTolerance tol) : m_(std::move(entries)) {
  require_square(m_, "DensityOperator");
  const complex tr = m_.trace();
  if (std::abs(tr - 1.0) > tol.trace) {
    std::ostringstream os;
    os << "DensityOperator: trace " << tr.real() << "+" << tr.imag() << "i differs from 1";
    throw ValidationError(os.str());
  }
  const double defect = max_abs(m_ - m_.adjoint());
  if (defect > tol.hermitian) {
    std::ostringstream os;
    os << "DensityOperator: not Hermitian (defect " << defect << ")";
    throw ValidationError(os.str());
  }
  const double min_ev = spectrum().minCoeff();
  if (min_ev < tol.min_eigenvalue) {
    std::ostringstream os;
    os << "DensityOperator: negative eigenvalue " << min_ev;
    throw ValidationError(os.str());
  }
}

DensityOperator DensityOperator::pure(std::size_t level, std::size_t dim) {
  return DensityOperator(Operator::projector(level, dim).matrix());
}

DensityOperator DensityOperator::from_populations(std::span<const double> populations) {
  return DensityOperator(Operator::diagonal(populations).matrix());
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return DensityOperator(Matrix::Identity(n, n) / static_cast<double>(dim));
}

std::vector<double> DensityOperator::populations() const {
  std::vector<double> p(dim());
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
  }
  return p;
}

double DensityOperator::max_coherence() const {
  double worst = 0.0;
  for (Eigen::Index r = 0; r < m_.rows(); ++r) {
    for (Eigen::Index c = 0; c < m_.cols(); ++c) {
      if (r != c) worst = std::max(worst, std::abs(m_(r, c)));
    }
  }
  return worst;
}

Eigen::VectorXd DensityOperator::spectrum() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m_), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Operator tensor(const Operator& a, const Operator& b) { return Operator(kron(a.matrix(), b.matrix())); }

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  return DensityOperator(kron(a.matrix(), b.matrix()));
}

Matrix partial_trace(const Matrix& m, std::span<const std::size_t> keep,
                     std::span<const std::size_t> dims) {
  if (dims.empty() || keep.empty()) throw ValidationError("partial_trace: empty factor list");
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (total != static_cast<std::size_t>(m.rows()) || m.rows() != m.cols()) {
    throw ValidationError("partial_trace: factor dimensions do not match the operator");
  }
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size() || kept[k]) throw ValidationError("partial_trace: bad subsystem selector");
    kept[k] = true;
  }

  // Strides with factor 0 slowest.
  std::vector<std::size_t> stride(dims.size());
  std::size_t s = 1;
  for (std::size_t f = dims.size(); f-- > 0;) {
    stride[f] = s;
    s *= dims[f];
  }
  std::vector<std::size_t> kept_stride(dims.size(), 0);
  std::size_t reduced = 1;
  for (std::size_t f = dims.size(); f-- > 0;) {
    if (kept[f]) {
      kept_stride[f] = reduced;
      reduced *= dims[f];
    }
  }

  auto split = [&](std::size_t index, std::size_t& kept_index, std::size_t& traced_key) {
    kept_index = 0;
    traced_key = 0;
    for (std::size_t f = 0; f < dims.size(); ++f) {
      const std::size_t digit = (index / stride[f]) % dims[f];
      if (kept[f]) {
        kept_index += digit * kept_stride[f];
      } else {
        traced_key = traced_key * dims[f] + digit;
      }
    }
  };

  const auto n = static_cast<Eigen::Index>(reduced);
  Matrix out = Matrix::Zero(n, n);
  for (std::size_t r = 0; r < total; ++r) {
    std::size_t kr = 0, tr = 0;
    split(r, kr, tr);
    for (std::size_t c = 0; c < total; ++c) {
      std::size_t kc = 0, tc = 0;
      split(c, kc, tc);
      if (tr == tc) {
        out(static_cast<Eigen::Index>(kr), static_cast<Eigen::Index>(kc)) +=
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      }
    }
  }
  return out;
}

DensityOperator partial_trace(const DensityOperator& rho, std::span<const std::size_t> keep,
                              std::span<const std::size_t> dims) {
  return DensityOperator(partial_trace(rho.matrix(), keep, dims));
}

Matrix unitary_propagator(const Operator& hamiltonian, double t) {
  if (!hamiltonian.is_hermitian()) {
    throw ValidationError("unitary_propagator: Hamiltonian is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(hamiltonian.matrix()));
  const Eigen::VectorXd& w = es.eigenvalues();
  Vector phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) phases(k) = std::exp(complex(0.0, -w(k) * t));
  const Matrix& v = es.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

DensityOperator evolve_unitary(const DensityOperator& rho, const Operator& hamiltonian, double t) {
  if (hamiltonian.dim() != rho.dim()) throw ValidationError("evolve_unitary: dimension mismatch");
  const Matrix u = unitary_propagator(hamiltonian, t);
  Matrix out = u * rho.matrix() * u.adjoint();
  return DensityOperator(hermitian_part(out));
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

double trace_distance(const Matrix& a, const Matrix& b) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(a - b), Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

DensityOperator gibbs_state(std::span<const double> levels, double temperature) {
  if (!(temperature > 0.0)) throw ValidationError("gibbs_state: temperature must be positive");
  const double ground = *std::min_element(levels.begin(), levels.end());
  std::vector<double> w(levels.size());
  double z = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    w[i] = std::exp(-(levels[i] - ground) / temperature);
    z += w[i];
  }
  for (double& x : w) x /= z;
  return DensityOperator::from_populations(w);
}

Operator two_qubit(const Operator& op_q1, const Operator& op_q2) {
  if (op_q1.dim() != 2 || op_q2.dim() != 2) throw ValidationError("two_qubit: factors must be 2x2");
  return tensor(op_q2, op_q1);
}

std::string to_csv(const Matrix& m) {
  std::ostringstream os;
  os.precision(17);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m(r, c).real() << ',' << m(r, c).imag();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace thermoq
