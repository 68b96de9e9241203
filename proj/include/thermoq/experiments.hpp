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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "thermoq/config.hpp"
#include "thermoq/qutrit.hpp"
#include "thermoq/solve.hpp"

namespace thermoq {

// Generator for the configured model; `compare` yields the two-qubit collision model.
std::unique_ptr<Generator> make_generator(const RunConfig& config);

struct Evaluation {
  SteadyStateReport report;
  std::optional<ComparisonReport> comparison;  // model == compare only
};

Evaluation evaluate(const RunConfig& config);

// ---- sweeps ----

enum class RowStatus { ok, skip, error };

struct SweepRow {
  double value;
  RowStatus status;
  std::string message;
  std::optional<Evaluation> evaluation;
};

struct SweepResult {
  RunConfig base;
  SweepSpec spec;
  std::vector<SweepRow> rows;
};

// Evaluates every grid point, concurrently when threads != 1 (0 = hardware
// concurrency). Rows come back in grid order. Invalid points become skip rows,
// solver failures become error rows.
SweepResult run_sweep(const RunConfig& config, const SweepSpec& spec, unsigned threads = 1);
std::string sweep_csv(const SweepResult& result);
// Q_c against the swept parameter; both machines when model == compare.
std::string sweep_svg(const SweepResult& result);

// ---- optimisation of E2 ----

struct OptimizeResult {
  double e2_opt;
  double q_c_opt;
  double bracket_lo;
  double bracket_hi;
  int evaluations;
};

// Cold current as a function of E2 with everything else taken from `config`.
double cold_current_at(const RunConfig& config, double e2);

// Coarse grid over [lo, hi] to isolate the maximum, then golden-section search
// to |dE2| < tol. Throws SearchError if the grid maximum sits on the bracket edge.
OptimizeResult optimize_e2(const RunConfig& config, double lo, double hi, int coarse_points = 200,
                           double tol = 1e-6);

struct ScanRow {
  double t_h;
  std::optional<OptimizeResult> result;
  std::string message;
};

std::vector<ScanRow> optimize_e2_scan(const RunConfig& config, const SweepSpec& t_h_grid,
                                      unsigned threads = 1);
std::string scan_csv(const std::vector<ScanRow>& rows, const RunConfig& config);

// ---- Carnot point ----

struct CarnotCheck {
  double e2;
  double beta_v_minus_beta_c;
  SteadyStateReport report;
  std::optional<double> product_distance;  // two-qubit machines only
  bool passed;
};

inline constexpr double kCarnotTol = 1e-9;

// Root-solves beta_V(E2) = beta_c and checks factorisation and vanishing currents.
// Throws SearchError when no E2 > E1 reaches the Carnot point.
CarnotCheck carnot_check(const RunConfig& config);
std::string carnot_to_json(const CarnotCheck& check, const RunConfig& config);

// Product state diag(r_c, rbar_c) (x) diag(r_c r_h, rbar_c rbar_h)/norm in basis order.
DensityOperator carnot_product_state(const FridgeSpec& spec, const BathTriple& baths);

// ---- dynamics ----

// Trajectory from |0...0><0...0| up to config.resolved_t_final().
Trajectory run_evolve(const RunConfig& config);

// ---- randomized comparison search ----

struct SearchSummary {
  int draws = 0;
  int two_qubit_wins = 0;
  int qutrit_wins = 0;
  int ties = 0;
  int failures = 0;
  std::optional<ComparisonReport> qutrit_example;
  std::optional<ComparisonReport> two_qubit_example;
};

// Random (temperatures, rates, E2) draws around config.spec.e1, seeded.
SearchSummary compare_search(const RunConfig& config, int draws, std::uint64_t seed);
std::string search_to_json(const SearchSummary& summary, const RunConfig& config, std::uint64_t seed);

// Minimal line chart: one polyline per series, shared axes.
struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

std::string svg_line_plot(const std::vector<PlotSeries>& series, const std::string& x_label,
                          const std::string& y_label, bool log_x);

}  // namespace thermoq
