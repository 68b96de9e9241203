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

#include "thermoq/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "thermoq/errors.hpp"

namespace thermoq {

using json = nlohmann::ordered_json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

[[noreturn]] void field_error(const RunConfig& cfg, std::string_view field, const std::string& what) {
  std::string msg;
  if (auto it = cfg.origin.find(std::string(field)); it != cfg.origin.end()) msg = it->second + ": ";
  msg += "field '" + std::string(field) + "': " + what;
  throw ValidationError(msg);
}

double parse_double(std::string_view field, std::string_view text) {
  std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw ValidationError("field '" + std::string(field) + "': '" + s + "' is not a number");
  }
  return v;
}

std::string fmt_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string squash(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '_' || c == '-') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

// 1-based line of the first occurrence of "key" in the JSON text.
int line_of_key(std::string_view text, std::string_view key) {
  const std::string needle = "\"" + std::string(key) + "\"";
  const auto pos = text.find(needle);
  if (pos == std::string_view::npos) return 0;
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
}

int line_of_byte(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

double* numeric_slot(RunConfig& cfg, const std::string& field) {
  if (field == "E1") return &cfg.spec.e1;
  if (field == "E2") return &cfg.spec.e2;
  if (field == "T_c") return &cfg.baths.t_c;
  if (field == "T_r") return &cfg.baths.t_r;
  if (field == "T_h") return &cfg.baths.t_h;
  if (field == "p_c") return &cfg.rates.p_c;
  if (field == "p_r") return &cfg.rates.p_r;
  if (field == "p_h") return &cfg.rates.p_h;
  if (field == "qutrit_pc_scale") return &cfg.qutrit_pc_scale;
  if (field == "t_final") return &cfg.t_final;
  if (field == "dt") return &cfg.dt;
  if (field == "bracket_lo") return &cfg.bracket_lo;
  if (field == "bracket_hi") return &cfg.bracket_hi;
  if (field.rfind("gamma_", 0) == 0) {
    if (!cfg.bosonic) cfg.bosonic = BosonicCoupling{kNaN, kNaN, kNaN};
    if (field == "gamma_c") return &cfg.bosonic->gamma_c;
    if (field == "gamma_r") return &cfg.bosonic->gamma_r;
    if (field == "gamma_h") return &cfg.bosonic->gamma_h;
  }
  return nullptr;
}

}  // namespace

std::string_view model_name(ModelKind m) {
  switch (m) {
    case ModelKind::collision: return "collision";
    case ModelKind::bosonic: return "bosonic";
    case ModelKind::qutrit: return "qutrit";
    case ModelKind::compare: return "compare";
  }
  return "?";
}

ModelKind parse_model(std::string_view name) {
  if (name == "collision") return ModelKind::collision;
  if (name == "bosonic") return ModelKind::bosonic;
  if (name == "qutrit") return ModelKind::qutrit;
  if (name == "compare") return ModelKind::compare;
  throw ValidationError("field 'model': unknown model '" + std::string(name) +
                        "' (expected collision, bosonic, qutrit or compare)");
}

std::string canonical_field(std::string_view key) {
  static const std::map<std::string, std::string> names{
      {"model", "model"},       {"e1", "E1"},
      {"e2", "E2"},             {"tc", "T_c"},
      {"tr", "T_r"},            {"th", "T_h"},
      {"pc", "p_c"},            {"pr", "p_r"},
      {"ph", "p_h"},            {"gammac", "gamma_c"},
      {"gammar", "gamma_r"},    {"gammah", "gamma_h"},
      {"qutritpcscale", "qutrit_pc_scale"},
      {"tfinal", "t_final"},    {"dt", "dt"},
      {"sweep", "sweep"},       {"bracket", "bracket"},
      {"bracketlo", "bracket_lo"},
      {"brackethi", "bracket_hi"},
      {"seed", "seed"},         {"searchdraws", "search_draws"},
  };
  const auto it = names.find(squash(key));
  if (it == names.end()) throw ValidationError("unknown field '" + std::string(key) + "'");
  return it->second;
}

SweepSpec SweepSpec::parse(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() < 4 || parts.size() > 5) {
    throw ValidationError("sweep '" + std::string(text) + "': expected param:min:max:count[:log]");
  }
  SweepSpec s;
  s.parameter = canonical_field(parts[0]);
  s.min = parse_double("sweep.min", parts[1]);
  s.max = parse_double("sweep.max", parts[2]);
  const double count = parse_double("sweep.count", parts[3]);
  if (count != std::floor(count) || count > 1e7) throw ValidationError("sweep: count must be an integer");
  s.count = static_cast<int>(count);
  if (parts.size() == 5) {
    if (parts[4] == "log") {
      s.log = true;
    } else if (parts[4] != "linear" && parts[4] != "lin") {
      throw ValidationError("sweep: scale must be 'log' or 'linear'");
    }
  }
  s.validate();
  return s;
}

void SweepSpec::validate() const {
  static const std::vector<std::string> sweepable{"E1", "E2", "T_c", "T_r", "T_h", "p_c", "p_r", "p_h",
                                                  "gamma_c", "gamma_r", "gamma_h", "qutrit_pc_scale"};
  if (std::find(sweepable.begin(), sweepable.end(), parameter) == sweepable.end()) {
    throw ValidationError("sweep: parameter '" + parameter + "' cannot be swept");
  }
  if (count < 2) throw ValidationError("sweep: count must be at least 2");
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
    throw ValidationError("sweep: need finite min < max");
  }
  if (log && !(min > 0.0)) throw ValidationError("sweep: log grid needs min > 0");
}

std::vector<double> SweepSpec::grid() const {
  validate();
  std::vector<double> g(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(count - 1);
    g[static_cast<std::size_t>(i)] =
        log ? std::exp(std::log(min) + f * (std::log(max) - std::log(min))) : min + f * (max - min);
  }
  g.front() = min;
  g.back() = max;
  return g;
}

std::string SweepSpec::to_string() const {
  return parameter + ":" + fmt_g17(min) + ":" + fmt_g17(max) + ":" + std::to_string(count) +
         (log ? ":log" : "");
}

void set_field(RunConfig& cfg, std::string_view key, double value) {
  const std::string field = canonical_field(key);
  if (double* slot = numeric_slot(cfg, field)) {
    *slot = value;
    return;
  }
  if (field == "seed") {
    if (!(value >= 0.0) || value != std::floor(value)) throw ValidationError("field 'seed': must be a non-negative integer");
    cfg.seed = static_cast<std::uint64_t>(value);
    return;
  }
  if (field == "search_draws") {
    if (value != std::floor(value) || value < 1 || value > 1e7) throw ValidationError("field 'search_draws': must be a positive integer");
    cfg.search_draws = static_cast<int>(value);
    return;
  }
  throw ValidationError("field '" + field + "': expects a non-numeric value");
}

void set_field(RunConfig& cfg, std::string_view key, std::string_view value) {
  const std::string field = canonical_field(key);
  if (field == "model") {
    cfg.model = parse_model(value);
  } else if (field == "sweep") {
    cfg.sweep = SweepSpec::parse(value);
  } else if (field == "bracket") {
    const auto colon = value.find(':');
    if (colon == std::string_view::npos) throw ValidationError("field 'bracket': expected lo:hi");
    cfg.bracket_lo = parse_double("bracket", value.substr(0, colon));
    cfg.bracket_hi = parse_double("bracket", value.substr(colon + 1));
  } else {
    set_field(cfg, field, parse_double(field, value));
  }
}

double get_field(const RunConfig& cfg, std::string_view key) {
  const std::string field = canonical_field(key);
  RunConfig copy = cfg;
  if (field.rfind("gamma_", 0) == 0) {
    const BosonicCoupling g = cfg.resolved_bosonic();
    return field == "gamma_c" ? g.gamma_c : field == "gamma_r" ? g.gamma_r : g.gamma_h;
  }
  if (double* slot = numeric_slot(copy, field)) return *slot;
  if (field == "seed") return static_cast<double>(cfg.seed);
  if (field == "search_draws") return cfg.search_draws;
  throw ValidationError("field '" + field + "' is not numeric");
}

void RunConfig::validate() const {
  auto finite = [&](const char* f, double v) {
    if (!std::isfinite(v)) field_error(*this, f, "must be finite");
  };
  finite("E1", spec.e1);
  finite("E2", spec.e2);
  if (!(spec.e1 > 0.0)) field_error(*this, "E1", "E1 must be positive");
  if (!(spec.e2 > spec.e1)) field_error(*this, "E2", "E2 must exceed E1");
  finite("T_c", baths.t_c);
  finite("T_r", baths.t_r);
  finite("T_h", baths.t_h);
  if (!(baths.t_c > 0.0)) field_error(*this, "T_c", "T_c must be positive");
  if (!(baths.t_c <= baths.t_r)) field_error(*this, "T_r", "T_c must not exceed T_r");
  if (!(baths.t_r <= baths.t_h)) field_error(*this, "T_h", "T_r must not exceed T_h");
  for (auto [f, v] : {std::pair{"p_c", rates.p_c}, std::pair{"p_r", rates.p_r}, std::pair{"p_h", rates.p_h}}) {
    if (!std::isfinite(v) || !(v > 0.0)) field_error(*this, f, "coupling rate must be positive and finite");
  }
  if (bosonic) {
    for (auto [f, v] : {std::pair{"gamma_c", bosonic->gamma_c}, std::pair{"gamma_r", bosonic->gamma_r},
                        std::pair{"gamma_h", bosonic->gamma_h}}) {
      if (std::isnan(v)) field_error(*this, f, "all three bosonic couplings must be given together");
      if (!std::isfinite(v) || !(v > 0.0)) field_error(*this, f, "bosonic coupling must be positive and finite");
    }
  }
  if (!std::isfinite(qutrit_pc_scale) || !(qutrit_pc_scale > 0.0)) {
    field_error(*this, "qutrit_pc_scale", "must be positive and finite");
  }
  if (!std::isfinite(t_final) || t_final < 0.0) field_error(*this, "t_final", "must be finite and non-negative");
  if (!std::isfinite(dt) || dt < 0.0) field_error(*this, "dt", "must be finite and non-negative");
  if (bracket_lo != 0.0 && !(bracket_lo > spec.e1)) field_error(*this, "bracket_lo", "must exceed E1");
  if (!std::isfinite(bracket_hi) || !(bracket_hi > resolved_bracket_lo())) {
    field_error(*this, "bracket_hi", "must exceed the lower end of the bracket");
  }
  if (search_draws < 1) field_error(*this, "search_draws", "must be positive");
  if (sweep) {
    try {
      sweep->validate();
    } catch (const ValidationError& e) {
      field_error(*this, "sweep", e.what());
    }
  }
}

BosonicCoupling RunConfig::resolved_bosonic() const {
  if (bosonic) return *bosonic;
  return equivalence_map(rates, baths, spec);
}

double RunConfig::resolved_t_final() const {
  return t_final > 0.0 ? t_final : 100.0 / rates.min();
}

double RunConfig::resolved_bracket_lo() const { return bracket_lo > 0.0 ? bracket_lo : spec.e1 + 1e-6; }

void merge_json(RunConfig& cfg, std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::ostringstream os;
    os << source << ":" << line_of_byte(text, e.byte) << ": JSON syntax error: " << e.what();
    throw ValidationError(os.str());
  }
  if (!doc.is_object()) throw ValidationError(std::string(source) + ":1: config must be a JSON object");

  for (const auto& [key, value] : doc.items()) {
    const std::string where = std::string(source) + ":" + std::to_string(line_of_key(text, key));
    try {
      const std::string field = canonical_field(key);
      if (value.is_number()) {
        set_field(cfg, field, value.get<double>());
      } else if (value.is_string()) {
        if (field == "model" || field == "sweep" || field == "bracket") {
          set_field(cfg, field, value.get<std::string>());
        } else {
          throw ValidationError("field '" + field + "': expected a number");
        }
      } else if (field == "bracket" && value.is_array() && value.size() == 2 && value[0].is_number() &&
                 value[1].is_number()) {
        cfg.bracket_lo = value[0].get<double>();
        cfg.bracket_hi = value[1].get<double>();
        cfg.origin["bracket_lo"] = where;
        cfg.origin["bracket_hi"] = where;
      } else {
        throw ValidationError("field '" + field + "': unsupported value type");
      }
      cfg.origin[field] = where;
    } catch (const ValidationError& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  RunConfig cfg;
  merge_json(cfg, buf.str(), path);
  return cfg;
}

std::string to_json(const RunConfig& cfg) {
  json j;
  j["model"] = std::string(model_name(cfg.model));
  j["E1"] = cfg.spec.e1;
  j["E2"] = cfg.spec.e2;
  j["T_c"] = cfg.baths.t_c;
  j["T_r"] = cfg.baths.t_r;
  j["T_h"] = cfg.baths.t_h;
  j["p_c"] = cfg.rates.p_c;
  j["p_r"] = cfg.rates.p_r;
  j["p_h"] = cfg.rates.p_h;
  try {
    const BosonicCoupling g = cfg.resolved_bosonic();
    j["gamma_c"] = g.gamma_c;
    j["gamma_r"] = g.gamma_r;
    j["gamma_h"] = g.gamma_h;
  } catch (const ValidationError&) {
    // Echo of an invalid config: leave the couplings out.
  }
  j["qutrit_pc_scale"] = cfg.qutrit_pc_scale;
  j["t_final"] = cfg.resolved_t_final();
  j["dt"] = cfg.dt;
  j["bracket"] = {cfg.resolved_bracket_lo(), cfg.bracket_hi};
  if (cfg.sweep) j["sweep"] = cfg.sweep->to_string();
  j["seed"] = cfg.seed;
  j["search_draws"] = cfg.search_draws;
  return j.dump();
}

}  // namespace thermoq
