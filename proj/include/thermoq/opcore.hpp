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
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace thermoq {

using complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPositivityTol = 1e-10;

// Square dense operator on a finite Hilbert space.
class Operator {
 public:
  Operator() = default;
  explicit Operator(Matrix entries);

  static Operator zero(std::size_t dim);
  static Operator identity(std::size_t dim);
  // |row><col| in a dim-dimensional space.
  static Operator ket_bra(std::size_t row, std::size_t col, std::size_t dim);
  static Operator projector(std::size_t level, std::size_t dim) { return ket_bra(level, level, dim); }
  static Operator diagonal(std::span<const double> values);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  bool is_hermitian(double tol = kHermitianTol) const;
  double hermiticity_defect() const;
  Operator adjoint() const { return Operator(m_.adjoint()); }
  complex trace() const { return m_.trace(); }

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(const Operator& a, const Operator& b) { return Operator(a.m_ * b.m_); }
  friend Operator operator*(complex s, const Operator& a) { return Operator(s * a.m_); }
  friend Operator operator*(double s, const Operator& a) { return Operator(s * a.m_); }

 private:
  Matrix m_;
};

// Validation thresholds for a density operator; positivity is relaxed
// mid-trajectory by the integrator.
struct StateTolerance {
  double trace = kTraceTol;
  double hermitian = kHermitianTol;
  double min_eigenvalue = -kPositivityTol;
};

// Hermitian, unit-trace, positive semidefinite operator. Construction validates.
class DensityOperator {
 public:
  explicit DensityOperator(Matrix entries, StateTolerance tol = {});

  static DensityOperator pure(std::size_t level, std::size_t dim);
  static DensityOperator from_populations(std::span<const double> populations);
  static DensityOperator maximally_mixed(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  std::vector<double> populations() const;
  double max_coherence() const;
  // Eigenvalues in ascending order.
  Eigen::VectorXd spectrum() const;
  Operator as_operator() const { return Operator(m_); }

 private:
  Matrix m_;
};

// Kronecker product; the left factor's index is slow.
Matrix kron(const Matrix& a, const Matrix& b);
Operator tensor(const Operator& a, const Operator& b);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

// Reduced state on the subsystems listed in `keep` (ascending factor indices,
// factor 0 slowest).
DensityOperator partial_trace(const DensityOperator& rho, std::span<const std::size_t> keep,
                              std::span<const std::size_t> dims);
// Same contraction for arbitrary (not necessarily positive) matrices.
Matrix partial_trace(const Matrix& m, std::span<const std::size_t> keep,
                     std::span<const std::size_t> dims);

// exp(-i H t) through the Hermitian eigendecomposition of H.
Matrix unitary_propagator(const Operator& hamiltonian, double t);
DensityOperator evolve_unitary(const DensityOperator& rho, const Operator& hamiltonian, double t);

Matrix commutator(const Matrix& a, const Matrix& b);
double trace_distance(const Matrix& a, const Matrix& b);
inline double trace_distance(const DensityOperator& a, const DensityOperator& b) {
  return trace_distance(a.matrix(), b.matrix());
}
// Largest entrywise modulus.
double max_abs(const Matrix& m);

// Gibbs state exp(-H/T)/Z of a diagonal Hamiltonian given by its levels.
DensityOperator gibbs_state(std::span<const double> levels, double temperature);

namespace basis {
// Product basis of the two-qubit machine, first label = qubit 1.
inline constexpr std::array<std::string_view, 4> kTwoQubitOrder{"00", "10", "01", "11"};
inline constexpr std::size_t two_qubit_index(int q1, int q2) {
  return static_cast<std::size_t>(q1 + 2 * q2);
}
}  // namespace basis

// op_q1 acting on qubit 1 and op_q2 on qubit 2, laid out in kTwoQubitOrder.
Operator two_qubit(const Operator& op_q1, const Operator& op_q2);

// Row-major "re,im" pairs, one matrix row per line.
std::string to_csv(const Matrix& m);

}  // namespace thermoq
