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

// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance [c1 ... c10 | all]
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "thermoq/bosonic.hpp"
#include "thermoq/experiments.hpp"

using namespace thermoq;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// The 200 random draws shared by criteria 2-4, plus 50 with rates spread over
// a factor 100 either way.
std::vector<oracle::Draw> draws(bool with_rate_spread) {
  std::mt19937_64 rng(20240601);
  std::vector<oracle::Draw> out;
  for (int i = 0; i < 200; ++i) out.push_back(oracle::random_draw(rng));
  if (with_rate_spread) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
      oracle::Draw d = oracle::random_draw(rng);
      d.rates.p_c *= std::pow(100.0, u(rng));
      d.rates.p_r *= std::pow(100.0, u(rng));
      d.rates.p_h *= std::pow(100.0, u(rng));
      out.push_back(d);
    }
  }
  return out;
}

Outcome c1() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_state = 0.0, worst_q = 0.0;
  for (double t : {0.3, 1.0, 2.5, 10.0}) {
    for (double e2 : {1.2, 2.0, 5.0}) {
      const FridgeSpec spec{1.0, e2};
      const BathTriple baths{t, t, t};
      const Eigen::Vector4d g = oracle::gibbs_two_qubit(1.0, e2, t);
      const Matrix gibbs = Eigen::VectorXcd(g.cast<complex>()).asDiagonal();
      const CouplingRates p{0.5, 1.0, 3.0};
      for (const SteadyStateReport& r :
           {steady_state(make_collision_generator(spec, baths, p)),
            steady_state(make_lindblad_generator(spec, baths, BosonicCoupling{0.3, 0.05, 2.0}))}) {
        worst_state = std::max(worst_state, max_abs(r.rho.matrix() - gibbs));
        worst_q = std::max({worst_q, std::abs(r.currents.q_c), std::abs(r.currents.q_h), std::abs(r.currents.q_r)});
      }
    }
  }
  const double dt = seconds_since(t0);
  return {worst_state < 1e-10 && worst_q < 1e-10 && dt < 1.0,
          fmt("max |rho - Gibbs| = %.2e, max |Q| = %.2e, %.3f s", worst_state, worst_q, dt)};
}

Outcome c2() {
  const auto t0 = std::chrono::steady_clock::now();
  double res = 0.0, coh = 0.0, first_law = 0.0, min_sigma = INFINITY;
  for (const oracle::Draw& d : draws(false)) {
    const SteadyStateReport r = steady_state(make_collision_generator(d.spec, d.baths, d.rates));
    res = std::max(res, r.residual);
    coh = std::max(coh, r.max_coherence);
    first_law = std::max(first_law, std::abs(r.currents.q_c + r.currents.q_h - r.currents.q_r));
    min_sigma = std::min(min_sigma, r.entropy_production);
  }
  const double dt = seconds_since(t0);
  return {res < 1e-10 && coh < 1e-10 && first_law < 1e-10 && min_sigma >= -1e-12 && dt < 10.0,
          fmt("200 draws: residual %.2e, coherence %.2e, first law %.2e, min entropy production %.2e, %.2f s",
              res, coh, first_law, min_sigma, dt)};
}

Outcome c3() {
  int checked = 0, skipped = 0, mismatches = 0;
  for (const oracle::Draw& d : draws(true)) {
    const double gap = virtual_beta(d.spec, d.baths) - d.baths.beta_c();
    if (std::abs(gap) < 1e-10) {
      ++skipped;
      continue;
    }
    const SteadyStateReport r = steady_state(make_collision_generator(d.spec, d.baths, d.rates));
    ++checked;
    if ((r.r1 - r.r_c > 0) != (gap > 0)) ++mismatches;
  }
  return {mismatches == 0 && checked > 0,
          fmt("%d draws checked, %d within 1e-10 of the boundary, %d sign mismatches", checked, skipped, mismatches)};
}

Outcome c4() {
  int used = 0, carnot_violations = 0;
  double worst = 0.0;
  for (const oracle::Draw& d : draws(true)) {
    const SteadyStateReport r = steady_state(make_collision_generator(d.spec, d.baths, d.rates));
    if (!(r.currents.q_h > 1e-12)) continue;
    ++used;
    const double ratio = r.currents.q_c / r.currents.q_h;
    worst = std::max(worst, std::abs(ratio - efficiency(d.spec)));
    if (!(ratio < carnot_efficiency(d.baths))) ++carnot_violations;
  }
  return {used > 0 && worst < 1e-8 && carnot_violations == 0,
          fmt("%d cooling draws: max |Q_c/Q_h - 2E1/(E2-E1)| = %.2e, %d above eta_C", used, worst,
              carnot_violations)};
}

Outcome c5() {
  const CarnotCheck c = carnot_check(RunConfig{});
  const HeatCurrents& q = c.report.currents;
  const double qmax = std::max({std::abs(q.q_c), std::abs(q.q_h), std::abs(q.q_r)});
  return {c.passed && c.product_distance && *c.product_distance < 1e-9 && qmax < 1e-9,
          fmt("E2 = %.10f, product trace distance %.2e, max |Q| = %.2e", c.e2, c.product_distance.value_or(NAN),
              qmax)};
}

Outcome c6() {
  const FridgeSpec spec;
  const CouplingRates p;
  const double limit = q_c_hot_limit(spec, BathTriple{}, p);
  const double q = steady_state(make_collision_generator(spec, BathTriple{1.0, 1.1, 1e6}, p)).currents.q_c;
  const double rel = std::abs(q - limit) / std::abs(limit);
  RunConfig cfg;
  const SweepResult s = run_sweep(cfg, SweepSpec::parse("T_h:1.2:100:50:log"), 0);
  int drops = 0, failed = 0;
  double prev = -INFINITY;
  for (const SweepRow& row : s.rows) {
    if (!row.evaluation) {
      ++failed;
      continue;
    }
    const double v = row.evaluation->report.currents.q_c;
    if (v < prev) ++drops;
    prev = v;
  }
  return {rel < 1e-4 && drops == 0 && failed == 0,
          fmt("Q_c(T_h=1e6) = %.10f vs limit %.10f (rel %.2e); 50-point sweep: %d decreases, %d failed points", q,
              limit, rel, drops, failed)};
}

Outcome c7() {
  const auto t0 = std::chrono::steady_clock::now();
  const RunConfig cfg;
  const double lo = cfg.resolved_bracket_lo(), hi = 12.0;
  const int n = 10000;
  std::vector<double> qs(n);
  for (int i = 0; i < n; ++i) qs[std::size_t(i)] = cold_current_at(cfg, lo + (hi - lo) * i / (n - 1));
  int local_maxima = 0;
  std::size_t arg = 0;
  for (std::size_t i = 1; i + 1 < qs.size(); ++i) {
    if (qs[i] > qs[i - 1] && qs[i] >= qs[i + 1]) ++local_maxima;
    if (qs[i] > qs[arg]) arg = i;
  }
  if (qs.back() > qs[arg]) arg = qs.size() - 1;
  const double spacing = (hi - lo) / (n - 1);
  const double grid_x = lo + spacing * double(arg);
  const OptimizeResult opt = optimize_e2(cfg, lo, hi);
  const bool interior = arg > 0 && arg + 1 < qs.size();
  const bool agree = std::abs(opt.e2_opt - grid_x) <= spacing;

  const auto scan = optimize_e2_scan(cfg, SweepSpec::parse("T_h:1.5:1000:12:log"), 0);
  int finite = 0;
  double max_opt = 0.0;
  for (const ScanRow& r : scan) {
    if (r.result && std::isfinite(r.result->e2_opt) && r.result->e2_opt < hi) {
      ++finite;
      max_opt = std::max(max_opt, r.result->e2_opt);
    }
  }
  const double dt = seconds_since(t0);
  return {local_maxima == 1 && interior && agree && finite == int(scan.size()) && dt < 30.0,
          fmt("%d local maxima; golden %.6f vs grid %.6f (spacing %.1e); T_h scan to 1e3: %d/%zu finite, largest "
              "E2_opt %.3f; %.2f s",
              local_maxima, opt.e2_opt, grid_x, spacing, finite, scan.size(), max_opt, dt)};
}

Outcome c8() {
  std::mt19937_64 rng(777);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const oracle::Draw d = oracle::random_draw(rng);
    const auto a = steady_state(make_collision_generator(d.spec, d.baths, d.rates));
    const auto b = steady_state(make_lindblad_generator(d.spec, d.baths, equivalence_map(d.rates, d.baths, d.spec)));
    worst = std::max(worst, max_abs(a.rho.matrix() - b.rho.matrix()));
  }
  return {worst < 1e-10, fmt("100 draws: max entrywise |rho_collision - rho_bosonic| = %.2e", worst)};
}

Outcome c9() {
  RunConfig cfg;
  cfg.model = ModelKind::compare;
  const SweepResult s = run_sweep(cfg, SweepSpec::parse("T_h:1.2:100:50:log"), 0);
  int two_qubit_ahead = 0;
  double worst_ratio = INFINITY;
  for (const SweepRow& row : s.rows) {
    if (!row.evaluation || !row.evaluation->comparison) continue;
    const ComparisonReport& c = *row.evaluation->comparison;
    if (c.q_c_two_qubit > c.q_c_qutrit) ++two_qubit_ahead;
    if (c.q_c_qutrit > 0) worst_ratio = std::min(worst_ratio, c.q_c_two_qubit / c.q_c_qutrit);
  }
  const bool sweep_ok = two_qubit_ahead == int(s.rows.size());
  const SearchSummary search = compare_search(cfg, 500, 1);
  const bool search_ok = search.qutrit_wins > 0;
  return {sweep_ok && search_ok,
          fmt("case-study T_h sweep: two-qubit ahead at %d/%zu points (min Q_c ratio two-qubit/qutrit %.3f); "
              "random search: qutrit wins %d/%d draws",
              two_qubit_ahead, s.rows.size(), worst_ratio, search.qutrit_wins, search.draws)};
}

Outcome c10() {
  const RunConfig cfg;
  const Trajectory tr = run_evolve(cfg);
  const SteadyStateReport ss = steady_state(*make_generator(cfg));
  const double dist = trace_distance(tr.states.back(), ss.rho);

  std::mt19937_64 rng(99);
  const FridgeSpec spec{1.0, 2.0};
  const BathTriple baths;
  double worst_g = 0.0, worst_tp = 0.0, min_eig = INFINITY;
  for (const Machine& m : {two_qubit_machine(spec), QutritSpec::from(spec).machine()}) {
    for (Bath b : kAllBaths) {
      const DensityOperator tau = bath_state(bath_population(m.coupling(b).energy, baths.beta(b)));
      for (int i = 0; i < 100 / 3 + 1; ++i) {
        const DensityOperator rho(oracle::random_state(int(m.dim()), rng));
        const DensityOperator ref = time_averaged_map(m, interaction_spec(m, b, 1.0), tau, rho);
        worst_tp = std::max(worst_tp, std::abs(ref.matrix().trace() - 1.0));
        min_eig = std::min(min_eig, ref.spectrum().minCoeff());
        for (double g : {0.13, 2.7, 40.0}) {
          const Matrix other = time_averaged_map(m, interaction_spec(m, b, g), tau, rho.matrix());
          worst_g = std::max(worst_g, max_abs(other - ref.matrix()));
        }
      }
    }
  }
  return {dist < 1e-8 && worst_g < 1e-10 && worst_tp < 1e-12 && min_eig > -1e-10,
          fmt("trace distance at t=%.0f: %.2e; maps on random states: max g-dependence %.2e, trace defect %.2e, "
              "min eigenvalue %.2e",
              tr.times.back(), dist, worst_g, worst_tp, min_eig)};
}

const std::map<std::string, std::pair<const char*, std::function<Outcome()>>> kCriteria{
    {"c1", {"equilibrium oracle", c1}},           {"c2", {"steady-state soundness", c2}},
    {"c3", {"cooling condition", c3}},            {"c4", {"efficiency identity", c4}},
    {"c5", {"Carnot point", c5}},                 {"c6", {"hot-limit saturation", c6}},
    {"c7", {"interior optimum", c7}},             {"c8", {"model equivalence", c8}},
    {"c9", {"comparison regimes", c9}},           {"c10", {"dynamics convergence", c10}},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> ids;
  for (int i = 1; i < argc; ++i) ids.emplace_back(argv[i]);
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
    ids.clear();
    for (int i = 1; i <= 10; ++i) ids.push_back("c" + std::to_string(i));
  }
  int failures = 0;
  for (const std::string& id : ids) {
    const auto it = kCriteria.find(id);
    if (it == kCriteria.end()) {
      std::fprintf(stderr, "unknown criterion '%s'\n", id.c_str());
      return 2;
    }
    Outcome o;
    try {
      o = it->second.second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %-3s %-24s %s\n", o.pass ? "PASS" : "FAIL", id.c_str(), it->second.first, o.detail.c_str());
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
