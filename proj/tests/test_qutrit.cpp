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

#include "doctest.h"
#include "oracles.hpp"
#include "thermoq/qutrit.hpp"
#include "thermoq/solve.hpp"

using namespace thermoq;

TEST_CASE("qutrit geometry") {
  const QutritSpec q = QutritSpec::from(FridgeSpec{1.0, 2.0});
  CHECK(q.cold_gap() == 2.0);
  CHECK(q.hot_gap() == 1.0);
  CHECK(q.sink_gap() == 3.0);
  const BathTriple b;
  // virtual transition 0 -> 2 E1 via sink down, hot down
  CHECK(q.virtual_beta(b) == doctest::Approx((3.0 * b.beta_r() - 1.0 * b.beta_h()) / 2.0));
}

TEST_CASE("qutrit steady state against a three-level rate solve") {
  const FridgeSpec spec{1.0, 2.5};
  const BathTriple baths{1.0, 1.3, 15.0};
  const CouplingRates p{0.5, 1.5, 3.0};
  const CollisionGenerator g = qutrit_generator(QutritSpec::from(spec), baths, p);
  const auto rep = steady_state(g);
  // rates p r / 2 down, p rbar / 2 up on each transition
  auto rc = oracle::ground(2.0, 1.0), rr = oracle::ground(3.5, 1.3), rh = oracle::ground(1.5, 15.0);
  Eigen::Matrix3d w = Eigen::Matrix3d::Zero();
  auto link = [&](int lo, int up, double rate, double r) {
    w(lo, up) += rate * r / 2;
    w(up, lo) += rate * (1 - r) / 2;
  };
  link(0, 1, p.p_c, rc);
  link(0, 2, p.p_r, rr);
  link(1, 2, p.p_h, rh);
  for (int k = 0; k < 3; ++k) w(k, k) = -(w.col(k).sum());
  const Eigen::VectorXd ref = oracle::stationary_lu(Eigen::MatrixXd(w));
  for (int k = 0; k < 3; ++k) CHECK(std::abs(rep.rho.populations()[std::size_t(k)] - ref(k)) < 1e-12);
  // cold gap 2 E1 times the net upward flux
  const double q_c = 2.0 * p.p_c / 2 * ((1 - rc) * ref(0) - rc * ref(1));
  CHECK(rep.currents.q_c == doctest::Approx(q_c).epsilon(1e-9));
}

TEST_CASE("comparison at the case study") {
  const ComparisonReport c = compare(FridgeSpec{}, BathTriple{}, CouplingRates{});
  CHECK(c.q_c_two_qubit == doctest::Approx(0.010138062093096846).epsilon(1e-10));
  CHECK(c.q_c_qutrit == doctest::Approx(0.012887932135234176).epsilon(1e-10));
  CHECK(c.winner == Winner::qutrit);
  // slowing the qutrit's cold coupling hands the win to the two-qubit fridge
  CHECK(compare(FridgeSpec{}, BathTriple{}, CouplingRates{}, 0.2).winner == Winner::two_qubit);
  const ComparisonReport eq = compare(FridgeSpec{}, BathTriple{1, 1, 1}, CouplingRates{});
  CHECK(eq.winner == Winner::tie);
  CHECK(winner_name(Winner::two_qubit) == "two-qubit");
}
