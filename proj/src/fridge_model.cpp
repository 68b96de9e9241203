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

#include "thermoq/fridge_model.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/tools/toms748_solve.hpp>

#include "thermoq/errors.hpp"

namespace thermoq {

std::string_view bath_name(Bath b) {
  switch (b) {
    case Bath::cold: return "c";
    case Bath::sink: return "r";
    case Bath::hot: return "h";
  }
  return "?";
}

void FridgeSpec::validate() const {
  if (!std::isfinite(e1) || !std::isfinite(e2)) throw ValidationError("E1 and E2 must be finite");
  if (!(e1 > 0.0)) throw ValidationError("E1 must be positive");
  if (!(e2 > e1)) throw ValidationError("E2 must exceed E1");
}

double FridgeSpec::transition_energy(Bath b) const {
  switch (b) {
    case Bath::cold: return e1;
    case Bath::sink: return e1 + e2;
    case Bath::hot: return e2 - e1;
  }
  return 0.0;
}

void BathTriple::validate() const {
  if (!std::isfinite(t_c) || !std::isfinite(t_r) || !std::isfinite(t_h)) {
    throw ValidationError("temperatures must be finite");
  }
  if (!(t_c > 0.0)) throw ValidationError("T_c must be positive");
  if (!(t_c <= t_r)) throw ValidationError("T_c must not exceed T_r");
  if (!(t_r <= t_h)) throw ValidationError("T_r must not exceed T_h");
}

double BathTriple::temperature(Bath b) const {
  switch (b) {
    case Bath::cold: return t_c;
    case Bath::sink: return t_r;
    case Bath::hot: return t_h;
  }
  return 0.0;
}

BathQubit bath_population(double energy, double beta) {
  if (!(energy > 0.0)) throw ValidationError("bath qubit energy must be positive");
  if (!(beta >= 0.0)) throw ValidationError("inverse temperature must be non-negative");
  const double r = 1.0 / (1.0 + std::exp(-beta * energy));
  // r >= 1/2, so 1 - r is exact and r + rbar == 1 holds bit-for-bit.
  return {energy, beta, r, 1.0 - r};
}

BathQubit bath_qubit(const FridgeSpec& spec, const BathTriple& baths, Bath b) {
  return bath_population(spec.transition_energy(b), baths.beta(b));
}

CycleLedger cycle_ledger(const FridgeSpec& spec) {
  spec.validate();
  const double e1 = spec.e1;
  const double e2 = spec.e2;
  CycleLedger ledger{{{
                         {0, 1, Bath::cold, e1},
                         {1, 2, Bath::hot, e2 - e1},
                         {2, 3, Bath::cold, e1},
                         {3, 0, Bath::sink, -(e2 + e1)},
                     }},
                     0.0,
                     0.0,
                     0.0};
  for (const Stroke& s : ledger.strokes) {
    switch (s.bath) {
      case Bath::cold: ledger.q_c += s.absorbed; break;
      case Bath::hot: ledger.q_h += s.absorbed; break;
      case Bath::sink: ledger.q_r -= s.absorbed; break;
    }
  }
  return ledger;
}

VirtualTemperature virtual_temperature(const FridgeSpec& spec, const BathTriple& baths) {
  const double e1 = spec.e1;
  const double e2 = spec.e2;
  return {(baths.beta_r() * (e2 + e1) - baths.beta_h() * (e2 - e1)) / (2.0 * e1)};
}

bool cooling_predicate(const FridgeSpec& spec, const BathTriple& baths) {
  return virtual_beta(spec, baths) - baths.beta_c() > kBoundaryTol;
}

double cycle_entropy(const FridgeSpec& spec, const BathTriple& baths) {
  const double e1 = spec.e1;
  const double e2 = spec.e2;
  return -2.0 * baths.beta_c() * e1 - baths.beta_h() * (e2 - e1) + baths.beta_r() * (e2 + e1);
}

bool entropy_predicts_cooling(const FridgeSpec& spec, const BathTriple& baths) {
  // dS = 2 e1 (beta_V - beta_c)
  return cycle_entropy(spec, baths) / (2.0 * spec.e1) > kBoundaryTol;
}

double efficiency(const FridgeSpec& spec) {
  spec.validate();
  return 2.0 * spec.e1 / (spec.e2 - spec.e1);
}

Efficiency efficiency(const FridgeSpec& spec, const BathTriple& baths) {
  const double eta = efficiency(spec);
  const double beta_v = virtual_beta(spec, baths);
  const double beta_form = (baths.beta_r() - baths.beta_h()) / (beta_v - baths.beta_r());
  return {eta, beta_form};
}

double carnot_efficiency(const BathTriple& baths) {
  const double denom = baths.beta_c() - baths.beta_r();
  if (denom == 0.0) return std::numeric_limits<double>::infinity();
  return (baths.beta_r() - baths.beta_h()) / denom;
}

std::optional<double> carnot_e2(double e1, const BathTriple& baths) {
  if (!(e1 > 0.0)) throw ValidationError("E1 must be positive");
  baths.validate();
  const double beta_c = baths.beta_c();
  auto gap = [&](double e2) { return virtual_beta(FridgeSpec{e1, e2}, baths) - beta_c; };

  // beta_V(e2) increases monotonically from beta_r at e2 = e1 when beta_r > beta_h.
  const double lo = e1;
  if (!(gap(lo) < 0.0)) return std::nullopt;
  double hi = 2.0 * e1;
  while (gap(hi) < 0.0) {
    hi *= 2.0;
    if (hi > 1e12 * e1) return std::nullopt;
  }

  // Tighten the bracket until the beta_V residual itself is below 1e-10.
  boost::uintmax_t max_iter = 200;
  auto tol = [](double a, double b) { return std::abs(b - a) <= 1e-15 * std::max(1.0, std::abs(a)); };
  auto [a, b] = boost::math::tools::toms748_solve(gap, lo, hi, tol, max_iter);
  const double root = std::abs(gap(a)) < std::abs(gap(b)) ? a : b;
  if (!(root > e1) || std::abs(gap(root)) >= 1e-10) return std::nullopt;
  return root;
}

}  // namespace thermoq
