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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "thermoq/collision.hpp"
#include "thermoq/errors.hpp"
#include "thermoq/solve.hpp"

using namespace thermoq;

TEST_CASE("disconnected machine is reported as degenerate") {
  // Levels 2 and 3 are reachable from nothing, so the stationary space is not unique.
  Machine m{"split", {0.0, 1.0, 5.0, 7.0}, {"a", "b", "c", "d"},
            {{Bath::cold, {{0, 1}}, 1.0}, {Bath::sink, {{0, 1}}, 1.0}, {Bath::hot, {{2, 3}}, 2.0}}};
  const CollisionGenerator gen(m, BathTriple{}, CouplingRates{});
  CHECK_THROWS_AS(steady_state(gen), DegenerateGeneratorError);
}

TEST_CASE("heat current refuses non-stationary states") {
  const CollisionGenerator gen = make_collision_generator(FridgeSpec{}, BathTriple{}, CouplingRates{});
  CHECK_THROWS_AS(heat_current(gen, DensityOperator::pure(0, 4), Bath::cold), ValidationError);
  const auto rep = steady_state(gen);
  CHECK(heat_current(gen, rep.rho, Bath::cold) == doctest::Approx(rep.currents.q_c));
}

TEST_CASE("RK4 relaxes to the stationary state") {
  const CollisionGenerator gen = make_collision_generator(FridgeSpec{}, BathTriple{}, CouplingRates{});
  const auto rep = steady_state(gen);
  EvolveOptions o;
  o.t_final = 100.0;
  const Trajectory tr = evolve(gen, DensityOperator::pure(0, 4), o);
  CHECK(tr.times.front() == 0.0);
  CHECK(tr.times.back() == doctest::Approx(100.0));
  CHECK(trace_distance(tr.states.back(), rep.rho) < 1e-8);
}

TEST_CASE("RK4 matches the exact propagator on a coherent initial state") {
  std::mt19937_64 rng(2);
  const CollisionGenerator gen = make_collision_generator(FridgeSpec{1.0, 2.2}, BathTriple{1.0, 1.5, 6.0},
                                                          CouplingRates{0.4, 1.1, 2.0});
  const Matrix rho0 = oracle::random_state(4, rng);
  EvolveOptions o;
  o.t_final = 3.0;
  o.emit_interval = 3.0;
  const Trajectory tr = evolve(gen, DensityOperator(rho0), o);
  const Eigen::VectorXcd v0 = Eigen::Map<const Eigen::VectorXcd>(rho0.data(), 16);
  const Eigen::VectorXcd v = (Matrix(gen.liouvillian() * 3.0)).exp() * v0;
  const Matrix exact = Eigen::Map<const Matrix>(v.data(), 4, 4);
  CHECK(max_abs(tr.states.back().matrix() - exact) < 1e-9);
}

TEST_CASE("convergence stop") {
  const CollisionGenerator gen = make_collision_generator(FridgeSpec{}, BathTriple{}, CouplingRates{});
  EvolveOptions o;
  o.t_final = 1e4;
  o.stop_when_converged = true;
  const Trajectory tr = evolve(gen, DensityOperator::pure(0, 4), o);
  CHECK(tr.converged);
  CHECK(tr.times.back() < 1e4);
}

TEST_CASE("liouvillian columns conserve trace") {
  const CollisionGenerator gen = make_collision_generator(FridgeSpec{}, BathTriple{}, CouplingRates{1, 2, 3});
  const Matrix& l = gen.liouvillian();
  for (Eigen::Index c = 0; c < l.cols(); ++c) {
    complex tr = 0;
    for (int k = 0; k < 4; ++k) tr += l(k + 4 * k, c);
    CHECK(std::abs(tr) < 1e-14);
  }
}
