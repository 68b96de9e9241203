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

#include "thermoq/thermoq.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include "json.hpp"
#include "thermoq/errors.hpp"
#include "thermoq/experiments.hpp"
#include "thermoq/report_io.hpp"

struct thermoq_config {
  thermoq::RunConfig cfg;
};

struct thermoq_report {
  thermoq::RunConfig cfg;
  thermoq::Evaluation eval;
};

namespace {

using namespace thermoq;

thread_local std::string g_last_error;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

thermoq_status fail(thermoq_status s, const char* msg) {
  g_last_error = msg;
  return s;
}

template <class F>
thermoq_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return THERMOQ_OK;
  } catch (const ValidationError& e) {
    return fail(THERMOQ_ERR_VALIDATION, e.what());
  } catch (const DegenerateGeneratorError& e) {
    return fail(THERMOQ_ERR_DEGENERATE, e.what());
  } catch (const SearchError& e) {
    return fail(THERMOQ_ERR_SEARCH, e.what());
  } catch (const IoError& e) {
    return fail(THERMOQ_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(THERMOQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(THERMOQ_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p) throw ValidationError(std::string(what) + " must not be NULL");
}

int winner_code(Winner w) {
  switch (w) {
    case Winner::two_qubit: return THERMOQ_WINNER_TWO_QUBIT;
    case Winner::qutrit: return THERMOQ_WINNER_QUTRIT;
    case Winner::tie: return THERMOQ_WINNER_TIE;
  }
  return THERMOQ_WINNER_TIE;
}

}  // namespace

extern "C" {

const char* thermoq_version(void) { return "0.1.0"; }

const char* thermoq_last_error(void) { return g_last_error.c_str(); }

void thermoq_free_string(char* s) { std::free(s); }

thermoq_status thermoq_config_new(thermoq_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new thermoq_config{};
  });
}

void thermoq_config_free(thermoq_config* config) { delete config; }

thermoq_status thermoq_config_load_json(thermoq_config* config, const char* path) {
  return guarded([&] {
    require(config, "config");
    require(path, "path");
    std::ifstream in(path);
    if (!in) throw IoError(std::string("cannot open config file '") + path + "'");
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    merge_json(config->cfg, text, path);
  });
}

thermoq_status thermoq_config_parse_json(thermoq_config* config, const char* text, const char* source) {
  return guarded([&] {
    require(config, "config");
    require(text, "text");
    merge_json(config->cfg, text, source ? source : "<config>");
  });
}

thermoq_status thermoq_config_set(thermoq_config* config, const char* key, const char* value,
                                  const char* origin) {
  return guarded([&] {
    require(config, "config");
    require(key, "key");
    require(value, "value");
    set_field(config->cfg, key, value);
    if (origin) {
      const std::string field = canonical_field(key);
      config->cfg.origin[field] = origin;
      if (field == "bracket") config->cfg.origin["bracket_lo"] = config->cfg.origin["bracket_hi"] = origin;
    }
  });
}

thermoq_status thermoq_config_get(const thermoq_config* config, const char* key, double* out) {
  return guarded([&] {
    require(config, "config");
    require(key, "key");
    require(out, "out");
    *out = get_field(config->cfg, key);
  });
}

thermoq_status thermoq_config_validate(const thermoq_config* config) {
  return guarded([&] {
    require(config, "config");
    config->cfg.validate();
  });
}

thermoq_status thermoq_config_to_json(const thermoq_config* config, char** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    *out = dup(to_json(config->cfg));
  });
}

thermoq_status thermoq_steady(const thermoq_config* config, thermoq_report** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    *out = new thermoq_report{config->cfg, evaluate(config->cfg)};
  });
}

thermoq_status thermoq_report_get(const thermoq_report* report, const char* quantity, double* out) {
  return guarded([&] {
    require(report, "report");
    require(quantity, "quantity");
    require(out, "out");
    const SteadyStateReport& r = report->eval.report;
    const std::string q = quantity;
    if (q == "r1") *out = r.r1;
    else if (q == "r_c") *out = r.r_c;
    else if (q == "Q_c") *out = r.currents.q_c;
    else if (q == "Q_h") *out = r.currents.q_h;
    else if (q == "Q_r") *out = r.currents.q_r;
    else if (q == "efficiency_realized") *out = r.efficiency_realized;
    else if (q == "cooling") *out = r.cooling ? 1.0 : 0.0;
    else if (q == "residual") *out = r.residual;
    else if (q == "max_coherence") *out = r.max_coherence;
    else if (q == "entropy_production") *out = r.entropy_production;
    else if (q == "rate_path_deviation") *out = r.rate_path_deviation;
    else if (q == "closed_form_deviation") {
      if (!r.closed_form_deviation) throw ValidationError("no closed form for machine '" + r.machine + "'");
      *out = *r.closed_form_deviation;
    } else if (q == "Q_c_qutrit") {
      if (!report->eval.comparison) throw ValidationError("Q_c_qutrit needs model 'compare'");
      *out = report->eval.comparison->q_c_qutrit;
    } else {
      throw ValidationError("unknown report quantity '" + q + "'");
    }
  });
}

thermoq_status thermoq_report_populations(const thermoq_report* report, double* out, size_t capacity,
                                          size_t* count) {
  return guarded([&] {
    require(report, "report");
    const std::vector<double> pops = report->eval.report.rho.populations();
    if (count) *count = pops.size();
    for (std::size_t i = 0; out && i < pops.size() && i < capacity; ++i) out[i] = pops[i];
  });
}

thermoq_status thermoq_report_json(const thermoq_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    auto j = nlohmann::ordered_json::parse(report_to_json(report->eval.report, report->cfg));
    if (report->eval.comparison) {
      j["comparison"] = nlohmann::ordered_json::parse(comparison_to_json(*report->eval.comparison, report->cfg));
    }
    *out = dup(j.dump(2));
  });
}

thermoq_status thermoq_report_summary(const thermoq_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    std::string s = report_summary(report->eval.report, report->cfg);
    if (const auto& c = report->eval.comparison) {
      s += "Q_c qutrit       " + csv_number(c->q_c_qutrit) + "\nwinner           " +
           std::string(winner_name(c->winner)) + "\n";
    }
    *out = dup(s);
  });
}

void thermoq_report_free(thermoq_report* report) { delete report; }

thermoq_status thermoq_evolve_csv(const thermoq_config* config, char** csv) {
  return guarded([&] {
    require(config, "config");
    require(csv, "csv");
    const Trajectory traj = run_evolve(config->cfg);
    *csv = dup(trajectory_csv(traj, make_generator(config->cfg)->machine(), config->cfg));
  });
}

thermoq_status thermoq_sweep(const thermoq_config* config, const char* sweep, unsigned threads, char** csv,
                             char** svg) {
  return guarded([&] {
    require(config, "config");
    require(csv, "csv");
    RunConfig cfg = config->cfg;
    if (sweep) {
      cfg.sweep = SweepSpec::parse(sweep);
      cfg.origin["sweep"] = "--sweep";
    }
    if (!cfg.sweep) throw ValidationError("field 'sweep': no sweep specified");
    cfg.validate();
    const SweepResult result = run_sweep(cfg, *cfg.sweep, threads);
    std::string text = sweep_csv(result);
    if (svg) *svg = dup(sweep_svg(result));
    *csv = dup(text);
  });
}

thermoq_status thermoq_optimize_e2(const thermoq_config* config, double* e2_opt, double* q_c_opt,
                                   char** json) {
  return guarded([&] {
    require(config, "config");
    const RunConfig& cfg = config->cfg;
    cfg.validate();
    const OptimizeResult r = optimize_e2(cfg, cfg.resolved_bracket_lo(), cfg.bracket_hi);
    if (e2_opt) *e2_opt = r.e2_opt;
    if (q_c_opt) *q_c_opt = r.q_c_opt;
    if (json) {
      nlohmann::ordered_json j;
      j["config"] = nlohmann::ordered_json::parse(to_json(cfg));
      j["E2_opt"] = r.e2_opt;
      j["Q_c_opt"] = r.q_c_opt;
      j["bracket"] = {r.bracket_lo, r.bracket_hi};
      j["evaluations"] = r.evaluations;
      *json = dup(j.dump(2));
    }
  });
}

thermoq_status thermoq_optimize_e2_scan(const thermoq_config* config, const char* t_h_grid, unsigned threads,
                                        char** csv) {
  return guarded([&] {
    require(config, "config");
    require(csv, "csv");
    RunConfig cfg = config->cfg;
    if (t_h_grid) {
      cfg.sweep = SweepSpec::parse(t_h_grid);
      cfg.origin["sweep"] = "--scan";
    }
    if (!cfg.sweep) throw ValidationError("field 'sweep': no T_h grid specified");
    cfg.validate();
    *csv = dup(scan_csv(optimize_e2_scan(cfg, *cfg.sweep, threads), cfg));
  });
}

thermoq_status thermoq_carnot(const thermoq_config* config, int* passed, char** json) {
  return guarded([&] {
    require(config, "config");
    const CarnotCheck c = carnot_check(config->cfg);
    if (passed) *passed = c.passed ? 1 : 0;
    if (json) *json = dup(carnot_to_json(c, config->cfg));
  });
}

thermoq_status thermoq_compare(const thermoq_config* config, int* winner, char** json) {
  return guarded([&] {
    require(config, "config");
    const RunConfig& cfg = config->cfg;
    cfg.validate();
    const ComparisonReport c = compare(cfg.spec, cfg.baths, cfg.rates, cfg.qutrit_pc_scale);
    if (winner) *winner = winner_code(c.winner);
    if (json) *json = dup(comparison_to_json(c, cfg));
  });
}

thermoq_status thermoq_compare_search(const thermoq_config* config, int draws, uint64_t seed, char** json) {
  return guarded([&] {
    require(config, "config");
    require(json, "json");
    const SearchSummary s = compare_search(config->cfg, draws, seed);
    *json = dup(search_to_json(s, config->cfg, seed));
  });
}

}  // extern "C"
