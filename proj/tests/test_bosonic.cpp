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
#include "thermoq/bosonic.hpp"
#include "thermoq/errors.hpp"
#include "thermoq/solve.hpp"

using namespace thermoq;

TEST_CASE("decay rates obey detailed balance") {
  const DecayRates r = decay_rates(0.3, 2.0, 0.7);
  const double n = 1.0 / std::expm1(2.0 * 0.7);
  CHECK(occupation(2.0, 0.7) == doctest::Approx(n));
  CHECK(r.down == doctest::Approx(0.3 * 8.0 * (1 + n)));
  CHECK(r.up == doctest::Approx(std::exp(-1.4) * r.down));
}

TEST_CASE("jump operators connect the coupled levels") {
  const auto jumps = jump_operators(FridgeSpec{1.0, 2.0});
  // sink raises |00> -> |11>
  CHECK(jumps[1].raise(3, 0) == complex(1));
  // hot raises |10> -> |01>
  CHECK(jumps[2].raise(2, 1) == complex(1));
  CHECK(max_abs(jumps[0].lower.matrix() - jumps[0].raise.matrix().adjoint()) == 0.0);
}

TEST_CASE("bosonic and collision steady states coincide under the equivalence map") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 40; ++i) {
    const oracle::Draw d = oracle::random_draw(rng);
    const auto coll = steady_state(make_collision_generator(d.spec, d.baths, d.rates));
    const LindbladGenerator lind = make_lindblad_generator(d.spec, d.baths, equivalence_map(d.rates, d.baths, d.spec));
    const auto bos = steady_state(lind);
    CHECK(max_abs(coll.rho.matrix() - bos.rho.matrix()) < 1e-10);
    // the bosonic dissipator moves population twice as fast as the averaged swap
    CHECK(bos.currents.q_c == doctest::Approx(2.0 * coll.currents.q_c).epsilon(1e-8));
    CHECK(lind.rates(Bath::cold).down == doctest::Approx(d.rates.p_c * oracle::ground(d.spec.e1, d.baths.t_c)));
  }
}

TEST_CASE("bosonic steady state matches an LU solve and detailed balance at equilibrium") {
  const FridgeSpec spec{1.0, 3.0};
  const LindbladGenerator g = make_lindblad_generator(spec, BathTriple{1.5, 1.5, 1.5}, BosonicCoupling{0.2, 0.05, 1.0});
  const auto rep = steady_state(g);
  const Eigen::Vector4d gibbs = oracle::gibbs_two_qubit(1.0, 3.0, 1.5);
  for (int k = 0; k < 4; ++k) CHECK(std::abs(rep.rho.populations()[std::size_t(k)] - gibbs(k)) < 1e-12);
  const Matrix lu = oracle::stationary_lu(g.liouvillian(), 4);
  CHECK(max_abs(lu - rep.rho.matrix()) < 1e-11);
  CHECK(std::abs(rep.currents.q_c) < 1e-12);
}

TEST_CASE("coupling validation") {
  CHECK_THROWS_AS((make_lindblad_generator(FridgeSpec{}, BathTriple{}, BosonicCoupling{-1, 1, 1})), ValidationError);
}
