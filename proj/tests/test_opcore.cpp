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

#include <array>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "thermoq/errors.hpp"
#include "thermoq/opcore.hpp"

using namespace thermoq;

TEST_CASE("kron puts the left factor on the slow index") {
  Matrix a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 5, 6, 7;
  const Matrix k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(k(0, 1) == complex(5));
  CHECK(k(1, 0) == complex(6));
  CHECK(k(2, 1) == complex(3 * 5));
  CHECK(k(3, 2) == complex(4 * 6));
}

TEST_CASE("two_qubit follows the (00, 10, 01, 11) basis") {
  const Operator up1 = two_qubit(Operator::ket_bra(1, 0, 2), Operator::identity(2));
  // sigma_+ on qubit 1 maps |00> -> |10> and |01> -> |11>
  CHECK(up1(basis::two_qubit_index(1, 0), basis::two_qubit_index(0, 0)) == complex(1));
  CHECK(up1(basis::two_qubit_index(1, 1), basis::two_qubit_index(0, 1)) == complex(1));
  CHECK(basis::two_qubit_index(0, 1) == 2);
  const std::array<double, 2> p1{0.7, 0.3}, p2{0.6, 0.4};
  const Operator rho = two_qubit(Operator::diagonal(p1), Operator::diagonal(p2));
  CHECK(rho(1, 1).real() == doctest::Approx(0.3 * 0.6));
  CHECK(rho(2, 2).real() == doctest::Approx(0.7 * 0.4));
}

TEST_CASE("DensityOperator validation") {
  Matrix m = Matrix::Identity(2, 2) * 0.5;
  CHECK_NOTHROW(DensityOperator{m});
  Matrix bad_trace = Matrix::Identity(2, 2) * 0.6;
  CHECK_THROWS_AS(DensityOperator{bad_trace}, ValidationError);
  Matrix non_herm = m;
  non_herm(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityOperator{non_herm}, ValidationError);
  Matrix negative(2, 2);
  negative << 1.2, 0, 0, -0.2;
  CHECK_THROWS_AS(DensityOperator{negative}, ValidationError);
  const std::array<double, 3> pops{0.5, 0.3, 0.2};
  const DensityOperator d = DensityOperator::from_populations(pops);
  CHECK(d.populations()[1] == doctest::Approx(0.3));
  CHECK(d.max_coherence() == 0.0);
}

TEST_CASE("partial trace of product and entangled states") {
  std::mt19937_64 rng(3);
  const DensityOperator a(oracle::random_state(2, rng));
  const DensityOperator b(oracle::random_state(3, rng));
  const DensityOperator ab = tensor(a, b);
  const std::array<std::size_t, 2> dims{2, 3};
  const std::array<std::size_t, 1> keep0{0}, keep1{1};
  CHECK(max_abs(partial_trace(ab, keep0, dims).matrix() - a.matrix()) < 1e-14);
  CHECK(max_abs(partial_trace(ab, keep1, dims).matrix() - b.matrix()) < 1e-14);

  Vector bell = Vector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const DensityOperator phi(Matrix(bell * bell.adjoint()));
  const std::array<std::size_t, 2> qq{2, 2};
  CHECK(max_abs(partial_trace(phi, keep0, qq).matrix() - 0.5 * Matrix::Identity(2, 2)) < 1e-15);
}

TEST_CASE("unitary propagator matches the dense matrix exponential") {
  std::mt19937_64 rng(11);
  Matrix h = oracle::random_state(4, rng) * 3.0;
  const Operator ham(h);
  const Matrix u = unitary_propagator(ham, 0.7);
  const Matrix ref = (Matrix(complex(0, -0.7) * h)).exp();
  CHECK(max_abs(u - ref) < 1e-12);
  CHECK(max_abs(u * u.adjoint() - Matrix::Identity(4, 4)) < 1e-12);
}

TEST_CASE("trace distance and Gibbs state") {
  const DensityOperator a = DensityOperator::pure(0, 2), b = DensityOperator::pure(1, 2);
  CHECK(trace_distance(a, b) == doctest::Approx(1.0));
  CHECK(trace_distance(a, a) == doctest::Approx(0.0));
  const std::array<double, 4> levels{0, 1, 2, 3};
  const Eigen::Vector4d ref = oracle::gibbs_two_qubit(1, 2, 0.8);
  const auto pops = gibbs_state(levels, 0.8).populations();
  for (int k = 0; k < 4; ++k) CHECK(pops[static_cast<std::size_t>(k)] == doctest::Approx(ref(k)).epsilon(1e-14));
  CHECK_THROWS_AS(gibbs_state(levels, 0.0), ValidationError);
}

TEST_CASE("commutator and csv") {
  Matrix a(2, 2), b(2, 2);
  a << 0, 1, 1, 0;
  b << 1, 0, 0, -1;
  CHECK(max_abs(commutator(a, b) - (a * b - b * a)) == 0.0);
  CHECK(to_csv(Matrix::Identity(2, 2)).find('\n') != std::string::npos);
}
