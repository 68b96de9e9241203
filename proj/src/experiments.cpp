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

#include "thermoq/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "thermoq/bosonic.hpp"
#include "thermoq/errors.hpp"
#include "thermoq/report_io.hpp"

namespace thermoq {

using json = nlohmann::ordered_json;

std::unique_ptr<Generator> make_generator(const RunConfig& cfg) {
  switch (cfg.model) {
    case ModelKind::collision:
    case ModelKind::compare:
      return std::make_unique<CollisionGenerator>(two_qubit_machine(cfg.spec), cfg.baths, cfg.rates);
    case ModelKind::bosonic:
      return std::make_unique<LindbladGenerator>(two_qubit_machine(cfg.spec), cfg.baths,
                                                 cfg.resolved_bosonic());
    case ModelKind::qutrit:
      return std::make_unique<CollisionGenerator>(
          qutrit_generator(QutritSpec::from(cfg.spec), cfg.baths, cfg.rates, cfg.qutrit_pc_scale));
  }
  throw ValidationError("unknown model");
}

Evaluation evaluate(const RunConfig& cfg) {
  cfg.validate();
  const auto gen = make_generator(cfg);
  Evaluation ev{steady_state(*gen), std::nullopt};
  if (cfg.model == ModelKind::compare) {
    const SteadyStateReport three =
        steady_state(qutrit_generator(QutritSpec::from(cfg.spec), cfg.baths, cfg.rates, cfg.qutrit_pc_scale));
    const double a = ev.report.currents.q_c;
    const double b = three.currents.q_c;
    Winner w = Winner::tie;
    if (std::abs(a - b) > kTieTol) w = a > b ? Winner::two_qubit : Winner::qutrit;
    ev.comparison = ComparisonReport{a, b, w, cfg.spec, cfg.baths, cfg.rates, cfg.qutrit_pc_scale};
  }
  return ev;
}

namespace {

unsigned resolve_threads(unsigned threads, std::size_t jobs) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));
}

// Runs job(i) for i in [0, n) on up to `threads` workers.
template <class Job>
void parallel_for(std::size_t n, unsigned threads, Job job) {
  threads = resolve_threads(threads, n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) job(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::string_view status_name(RowStatus s) {
  switch (s) {
    case RowStatus::ok: return "ok";
    case RowStatus::skip: return "skip";
    case RowStatus::error: return "error";
  }
  return "?";
}

std::string csv_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out + "\"";
}

}  // namespace

SweepResult run_sweep(const RunConfig& cfg, const SweepSpec& spec, unsigned threads) {
  const std::vector<double> grid = spec.grid();
  SweepResult result{cfg, spec, {}};
  result.rows.resize(grid.size(), SweepRow{0.0, RowStatus::error, "", std::nullopt});
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    SweepRow& row = result.rows[i];
    row.value = grid[i];
    RunConfig point = cfg;
    try {
      set_field(point, spec.parameter, grid[i]);
      point.origin[spec.parameter] = "sweep point " + std::to_string(i);
      point.validate();
    } catch (const ValidationError& e) {
      row.status = RowStatus::skip;
      row.message = e.what();
      return;
    }
    try {
      row.evaluation = evaluate(point);
      row.status = RowStatus::ok;
    } catch (const std::exception& e) {
      row.status = RowStatus::error;
      row.message = e.what();
    }
  });
  return result;
}

std::string sweep_csv(const SweepResult& result) {
  const bool compare = result.base.model == ModelKind::compare;
  std::ostringstream os;
  os << "# thermoq sweep " << result.spec.to_string() << "\n";
  os << "# config: " << to_json(result.base) << "\n";
  os << result.spec.parameter
     << ",status,r1,r_c,beta_V,Q_c,Q_h,Q_r,efficiency_realized,efficiency,eta_C,cooling,residual";
  if (compare) os << ",Q_c_qutrit,winner";
  os << ",message\n";
  const std::size_t numeric_cols = 11 + (compare ? 2 : 0);
  for (const SweepRow& row : result.rows) {
    os << csv_number(row.value) << ',' << status_name(row.status);
    if (row.evaluation) {
      RunConfig point = result.base;
      set_field(point, result.spec.parameter, row.value);
      const SteadyStateReport& r = row.evaluation->report;
      os << ',' << csv_number(r.r1) << ',' << csv_number(r.r_c) << ','
         << csv_number(virtual_beta(point.spec, point.baths)) << ',' << csv_number(r.currents.q_c) << ','
         << csv_number(r.currents.q_h) << ',' << csv_number(r.currents.q_r) << ','
         << csv_number(r.efficiency_realized) << ',' << csv_number(efficiency(point.spec)) << ','
         << csv_number(carnot_efficiency(point.baths)) << ',' << (r.cooling ? "true" : "false") << ','
         << csv_number(r.residual);
      if (compare) {
        const ComparisonReport& c = *row.evaluation->comparison;
        os << ',' << csv_number(c.q_c_qutrit) << ',' << winner_name(c.winner);
      }
    } else {
      for (std::size_t k = 0; k < numeric_cols; ++k) os << ',';
    }
    os << ',' << (row.message.empty() ? "" : csv_escape(row.message)) << "\n";
  }
  return os.str();
}

std::string sweep_svg(const SweepResult& result) {
  PlotSeries pair{result.base.model == ModelKind::compare ? "two-qubit" : std::string(model_name(result.base.model)), {}, {}};
  PlotSeries three{"qutrit", {}, {}};
  for (const SweepRow& row : result.rows) {
    if (!row.evaluation) continue;
    pair.x.push_back(row.value);
    pair.y.push_back(row.evaluation->report.currents.q_c);
    if (row.evaluation->comparison) {
      three.x.push_back(row.value);
      three.y.push_back(row.evaluation->comparison->q_c_qutrit);
    }
  }
  std::vector<PlotSeries> series{pair};
  if (!three.x.empty()) series.push_back(three);
  return svg_line_plot(series, result.spec.parameter, "Q_c", result.spec.log);
}

double cold_current_at(const RunConfig& cfg, double e2) {
  RunConfig point = cfg;
  if (point.model == ModelKind::compare) point.model = ModelKind::collision;
  point.spec.e2 = e2;
  point.validate();
  return steady_state(*make_generator(point)).currents.q_c;
}

OptimizeResult optimize_e2(const RunConfig& cfg, double lo, double hi, int coarse_points, double tol) {
  if (!(lo > cfg.spec.e1) || !(hi > lo)) {
    std::ostringstream os;
    os << "bracket [" << lo << ", " << hi << "] must satisfy E1 < lo < hi";
    throw ValidationError(os.str());
  }
  if (coarse_points < 3) throw ValidationError("optimize_e2: coarse grid needs at least 3 points");
  int evals = 0;
  auto q = [&](double e2) {
    ++evals;
    return cold_current_at(cfg, e2);
  };

  std::vector<double> xs(static_cast<std::size_t>(coarse_points)), fs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(xs.size() - 1);
    fs[i] = q(xs[i]);
  }
  const auto best = static_cast<std::size_t>(std::max_element(fs.begin(), fs.end()) - fs.begin());
  if (best == 0 || best + 1 == xs.size()) {
    std::ostringstream os;
    os.precision(10);
    os << "no interior maximum of Q_c(E2) in [" << lo << ", " << hi << "]: maximum Q_c=" << fs[best]
       << " at boundary E2=" << xs[best];
    throw SearchError(os.str());
  }

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = xs[best - 1], b = xs[best + 1];
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = q(c), fd = q(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = q(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = q(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, q(x), lo, hi, evals};
}

std::vector<ScanRow> optimize_e2_scan(const RunConfig& cfg, const SweepSpec& grid_spec, unsigned threads) {
  if (grid_spec.parameter != "T_h") throw ValidationError("optimize-e2 scan runs over T_h");
  const std::vector<double> grid = grid_spec.grid();
  std::vector<ScanRow> rows(grid.size(), ScanRow{0.0, std::nullopt, ""});
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    rows[i].t_h = grid[i];
    RunConfig point = cfg;
    point.baths.t_h = grid[i];
    try {
      point.validate();
      rows[i].result = optimize_e2(point, point.resolved_bracket_lo(), point.bracket_hi);
    } catch (const std::exception& e) {
      rows[i].message = e.what();
    }
  });
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows, const RunConfig& cfg) {
  std::ostringstream os;
  os << "# thermoq optimize-e2 scan\n# config: " << to_json(cfg) << "\n";
  os << "T_h,status,E2_opt,Q_c_opt,message\n";
  for (const ScanRow& r : rows) {
    os << csv_number(r.t_h) << ',';
    if (r.result) {
      os << "ok," << csv_number(r.result->e2_opt) << ',' << csv_number(r.result->q_c_opt) << ",\n";
    } else {
      os << "error,,," << csv_escape(r.message) << "\n";
    }
  }
  return os.str();
}

DensityOperator carnot_product_state(const FridgeSpec& spec, const BathTriple& baths) {
  const BathQubit c = bath_qubit(spec, baths, Bath::cold);
  const BathQubit h = bath_qubit(spec, baths, Bath::hot);
  const double z = c.r * h.r + c.rbar * h.rbar;
  const std::array<double, 2> q1{c.r, c.rbar};
  const std::array<double, 2> q2{c.r * h.r / z, c.rbar * h.rbar / z};
  return DensityOperator(two_qubit(Operator::diagonal(q1), Operator::diagonal(q2)).matrix());
}

CarnotCheck carnot_check(const RunConfig& cfg) {
  cfg.validate();
  const auto root = carnot_e2(cfg.spec.e1, cfg.baths);
  if (!root) {
    std::ostringstream os;
    os.precision(10);
    os << "no E2 > E1 reaches beta_V = beta_c for T_c=" << cfg.baths.t_c << ", T_r=" << cfg.baths.t_r
       << ", T_h=" << cfg.baths.t_h << " (needs T_c < T_r < T_h)";
    throw SearchError(os.str());
  }
  RunConfig point = cfg;
  point.spec.e2 = *root;
  if (point.model == ModelKind::compare) point.model = ModelKind::collision;
  const auto gen = make_generator(point);
  SteadyStateReport report = steady_state(*gen);
  std::optional<double> product;
  if (gen->machine().name == "two-qubit") {
    product = trace_distance(report.rho, carnot_product_state(point.spec, point.baths));
  }
  const HeatCurrents& q = report.currents;
  const bool currents_vanish =
      std::abs(q.q_c) < kCarnotTol && std::abs(q.q_h) < kCarnotTol && std::abs(q.q_r) < kCarnotTol;
  const bool passed = currents_vanish && (!product || *product < kCarnotTol);
  return {*root, virtual_beta(point.spec, point.baths) - point.baths.beta_c(), std::move(report), product,
          passed};
}

std::string carnot_to_json(const CarnotCheck& c, const RunConfig& cfg) {
  json j;
  j["config"] = json::parse(to_json(cfg));
  j["E2"] = c.e2;
  j["beta_V_minus_beta_c"] = c.beta_v_minus_beta_c;
  j["product_trace_distance"] = c.product_distance ? json(*c.product_distance) : json(nullptr);
  j["Q_c"] = c.report.currents.q_c;
  j["Q_h"] = c.report.currents.q_h;
  j["Q_r"] = c.report.currents.q_r;
  j["populations"] = c.report.rho.populations();
  j["tolerance"] = kCarnotTol;
  j["passed"] = c.passed;
  return j.dump(2);
}

Trajectory run_evolve(const RunConfig& cfg) {
  cfg.validate();
  const auto gen = make_generator(cfg);
  EvolveOptions opts;
  opts.t_final = cfg.resolved_t_final();
  opts.dt = cfg.dt;
  return evolve(*gen, DensityOperator::pure(0, gen->dim()), opts);
}

SearchSummary compare_search(const RunConfig& cfg, int draws, std::uint64_t seed) {
  if (draws < 1) throw ValidationError("compare search needs at least one draw");
  std::mt19937_64 rng(seed);
  auto uniform = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
  auto log_uniform = [&](double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); };

  SearchSummary s;
  const double e1 = cfg.spec.e1;
  for (int i = 0; i < draws; ++i) {
    const FridgeSpec spec{e1, e1 * (1.0 + log_uniform(0.01, 20.0))};
    BathTriple baths;
    baths.t_c = e1 * log_uniform(0.2, 5.0);
    baths.t_r = baths.t_c * uniform(1.0, 3.0);
    baths.t_h = baths.t_r * log_uniform(1.01, 1000.0);
    const CouplingRates rates{log_uniform(0.01, 100.0), log_uniform(0.01, 100.0), log_uniform(0.01, 100.0)};
    ++s.draws;
    try {
      const ComparisonReport c = compare(spec, baths, rates, cfg.qutrit_pc_scale);
      switch (c.winner) {
        case Winner::two_qubit:
          ++s.two_qubit_wins;
          if (!s.two_qubit_example) s.two_qubit_example = c;
          break;
        case Winner::qutrit:
          ++s.qutrit_wins;
          if (!s.qutrit_example) s.qutrit_example = c;
          break;
        case Winner::tie: ++s.ties; break;
      }
    } catch (const std::exception&) {
      ++s.failures;
    }
  }
  return s;
}

std::string search_to_json(const SearchSummary& s, const RunConfig& cfg, std::uint64_t seed) {
  auto example = [](const std::optional<ComparisonReport>& c) -> json {
    if (!c) return nullptr;
    return {{"E1", c->spec.e1},       {"E2", c->spec.e2},         {"T_c", c->baths.t_c},
            {"T_r", c->baths.t_r},    {"T_h", c->baths.t_h},      {"p_c", c->rates.p_c},
            {"p_r", c->rates.p_r},    {"p_h", c->rates.p_h},      {"Q_c_two_qubit", c->q_c_two_qubit},
            {"Q_c_qutrit", c->q_c_qutrit}};
  };
  json j;
  j["config"] = json::parse(to_json(cfg));
  j["seed"] = seed;
  j["draws"] = s.draws;
  j["two_qubit_wins"] = s.two_qubit_wins;
  j["qutrit_wins"] = s.qutrit_wins;
  j["ties"] = s.ties;
  j["failures"] = s.failures;
  j["two_qubit_example"] = example(s.two_qubit_example);
  j["qutrit_example"] = example(s.qutrit_example);
  return j.dump(2);
}

}  // namespace thermoq
