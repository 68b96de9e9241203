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

// thermoq command-line front end. Links only the C API.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "thermoq/thermoq.h"

namespace {

constexpr int kExitIo = 1;

struct Options {
  std::string config;
  std::string model;
  std::vector<std::pair<std::string, std::optional<double>>> numbers{
      {"E1", {}}, {"E2", {}}, {"T_c", {}}, {"T_r", {}}, {"T_h", {}}, {"p_c", {}}, {"p_r", {}}, {"p_h", {}}};
  std::string sweep;
  std::optional<std::string> plot;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string scan;
  std::string bracket;
  int search = 0;
  bool verbose = false;
};

struct ConfigDeleter {
  void operator()(thermoq_config* c) const { thermoq_config_free(c); }
};
using ConfigPtr = std::unique_ptr<thermoq_config, ConfigDeleter>;

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { thermoq_free_string(p); }
  std::string str() const { return p ? p : ""; }
};

// Thrown to unwind with the status already reported.
struct Exit {
  int code;
};

void check(thermoq_status s) {
  if (s == THERMOQ_OK) return;
  std::cerr << "thermoq: error: " << thermoq_last_error() << "\n";
  throw Exit{s == THERMOQ_ERR_IO ? kExitIo : static_cast<int>(s)};
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "JSON run configuration");
  cmd->add_option("--model", o.model, "collision | bosonic | qutrit | compare");
  static const char* flags[] = {"--e1", "--e2", "--tc", "--tr", "--th", "--pc", "--pr", "--ph"};
  for (std::size_t i = 0; i < o.numbers.size(); ++i) {
    cmd->add_option(flags[i], o.numbers[i].second, "override " + o.numbers[i].first);
  }
  cmd->add_option("--out", o.out, "write the data artifact here instead of stdout");
  cmd->add_option("--seed", o.seed, "seed for randomized modes");
  cmd->add_flag("--verbose,-v", o.verbose, "echo the resolved config to stderr");
}

ConfigPtr build_config(const Options& o) {
  thermoq_config* raw = nullptr;
  check(thermoq_config_new(&raw));
  ConfigPtr cfg(raw);
  if (!o.config.empty()) check(thermoq_config_load_json(cfg.get(), o.config.c_str()));
  if (!o.model.empty()) check(thermoq_config_set(cfg.get(), "model", o.model.c_str(), "--model"));
  static const char* flags[] = {"--e1", "--e2", "--tc", "--tr", "--th", "--pc", "--pr", "--ph"};
  for (std::size_t i = 0; i < o.numbers.size(); ++i) {
    if (!o.numbers[i].second) continue;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", *o.numbers[i].second);
    check(thermoq_config_set(cfg.get(), o.numbers[i].first.c_str(), buf, flags[i]));
  }
  if (!o.sweep.empty()) check(thermoq_config_set(cfg.get(), "sweep", o.sweep.c_str(), "--sweep"));
  if (!o.bracket.empty()) check(thermoq_config_set(cfg.get(), "bracket", o.bracket.c_str(), "--bracket"));
  if (o.seed) check(thermoq_config_set(cfg.get(), "seed", std::to_string(*o.seed).c_str(), "--seed"));
  check(thermoq_config_validate(cfg.get()));
  if (o.verbose) {
    OwnedString json;
    check(thermoq_config_to_json(cfg.get(), &json.p));
    std::cerr << "resolved config:\n" << json.str() << "\n";
  }
  return cfg;
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << data)) {
    std::cerr << "thermoq: error: cannot write '" << path << "'\n";
    throw Exit{kExitIo};
  }
}

void emit(const Options& o, const std::string& data) {
  if (o.out.empty()) {
    std::cout << data;
    if (!data.empty() && data.back() != '\n') std::cout << "\n";
  } else {
    write_file(o.out, data);
  }
}

unsigned thread_cap() {
  const char* env = std::getenv("THERMOQ_THREADS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0') {
    std::cerr << "thermoq: error: THERMOQ_THREADS must be a non-negative integer\n";
    throw Exit{THERMOQ_ERR_VALIDATION};
  }
  return static_cast<unsigned>(v);
}

std::string plot_path(const Options& o) {
  if (o.plot && !o.plot->empty()) return *o.plot;
  if (o.out.empty()) return "thermoq_plot.svg";
  const auto dot = o.out.find_last_of('.');
  const auto slash = o.out.find_last_of('/');
  const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
  return (has_ext ? o.out.substr(0, dot) : o.out) + ".svg";
}

int cmd_steady(const Options& o) {
  ConfigPtr cfg = build_config(o);
  thermoq_report* report = nullptr;
  check(thermoq_steady(cfg.get(), &report));
  std::unique_ptr<thermoq_report, void (*)(thermoq_report*)> guard(report, thermoq_report_free);
  OwnedString json, summary;
  check(thermoq_report_json(report, &json.p));
  check(thermoq_report_summary(report, &summary.p));
  emit(o, json.str());
  std::cerr << summary.str();
  return 0;
}

int cmd_evolve(const Options& o) {
  ConfigPtr cfg = build_config(o);
  OwnedString csv;
  check(thermoq_evolve_csv(cfg.get(), &csv.p));
  emit(o, csv.str());
  return 0;
}

int cmd_sweep(const Options& o) {
  ConfigPtr cfg = build_config(o);
  OwnedString csv, svg;
  check(thermoq_sweep(cfg.get(), nullptr, thread_cap(), &csv.p, o.plot ? &svg.p : nullptr));
  emit(o, csv.str());
  if (o.plot) {
    const std::string path = plot_path(o);
    write_file(path, svg.str());
    std::cerr << "plot written to " << path << "\n";
  }
  return 0;
}

int cmd_optimize(const Options& o) {
  ConfigPtr cfg = build_config(o);
  if (!o.scan.empty()) {
    OwnedString csv;
    check(thermoq_optimize_e2_scan(cfg.get(), o.scan.c_str(), thread_cap(), &csv.p));
    emit(o, csv.str());
    return 0;
  }
  double e2 = 0.0, q = 0.0;
  OwnedString json;
  check(thermoq_optimize_e2(cfg.get(), &e2, &q, &json.p));
  emit(o, json.str());
  std::fprintf(stderr, "E2_opt  %.10g\nQ_c_opt %.10g\n", e2, q);
  return 0;
}

int cmd_carnot(const Options& o) {
  ConfigPtr cfg = build_config(o);
  int passed = 0;
  OwnedString json;
  check(thermoq_carnot(cfg.get(), &passed, &json.p));
  emit(o, json.str());
  std::cerr << "carnot verification " << (passed ? "passed" : "FAILED") << "\n";
  return passed ? 0 : kExitIo;
}

int cmd_compare(const Options& o) {
  ConfigPtr cfg = build_config(o);
  OwnedString json;
  if (o.search > 0) {
    double seed = 0.0;
    check(thermoq_config_get(cfg.get(), "seed", &seed));
    check(thermoq_compare_search(cfg.get(), o.search, static_cast<std::uint64_t>(seed), &json.p));
    emit(o, json.str());
    return 0;
  }
  int winner = 0;
  check(thermoq_compare(cfg.get(), &winner, &json.p));
  emit(o, json.str());
  static const char* names[] = {"two-qubit", "qutrit", "tie"};
  std::cerr << "winner " << names[winner] << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thermoq: two-qubit quantum absorption refrigerator"};
  app.set_version_flag("--version", std::string(thermoq_version()));
  app.require_subcommand(1);

  Options o;
  auto* steady = app.add_subcommand("steady", "steady state, heat currents, cooling flag (JSON)");
  auto* evolve = app.add_subcommand("evolve", "transient dynamics from |0...0> (CSV)");
  auto* sweep = app.add_subcommand("sweep", "one-parameter sweep (CSV, optional SVG)");
  auto* optimize = app.add_subcommand("optimize-e2", "E2 maximising the cold current");
  auto* carnot = app.add_subcommand("carnot", "locate and verify the Carnot point");
  auto* compare = app.add_subcommand("compare", "two-qubit versus single-qutrit fridge");
  for (auto* cmd : {steady, evolve, sweep, optimize, carnot, compare}) add_common(cmd, o);
  sweep->add_option("--sweep", o.sweep, "param:min:max:count[:log]");
  sweep->add_option("--plot", o.plot, "also write an SVG plot (default: <out>.svg)")->expected(0, 1);
  optimize->add_option("--scan", o.scan, "tabulate E2_opt over a T_h grid, e.g. T_h:2:100:20:log");
  optimize->add_option("--bracket", o.bracket, "search bracket lo:hi");
  compare->add_option("--search", o.search, "randomized search with N draws")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : THERMOQ_ERR_VALIDATION;
  }

  try {
    if (*steady) return cmd_steady(o);
    if (*evolve) return cmd_evolve(o);
    if (*sweep) return cmd_sweep(o);
    if (*optimize) return cmd_optimize(o);
    if (*carnot) return cmd_carnot(o);
    if (*compare) return cmd_compare(o);
  } catch (const Exit& e) {
    return e.code;
  }
  return 0;
}
