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

#include "thermoq/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace thermoq {

using json = nlohmann::ordered_json;

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json config_json(const RunConfig& cfg) { return json::parse(to_json(cfg)); }

}  // namespace

std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string report_to_json(const SteadyStateReport& r, const RunConfig& cfg) {
  const Matrix& m = r.rho.matrix();
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row_re = json::array(), row_im = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      row_re.push_back(m(i, k).real());
      row_im.push_back(m(i, k).imag());
    }
    re.push_back(row_re);
    im.push_back(row_im);
  }
  const VirtualTemperature vt = virtual_temperature(cfg.spec, cfg.baths);

  json j;
  j["model"] = r.model;
  j["machine"] = r.machine;
  j["basis"] = r.machine == "two-qubit" ? json{"00", "10", "01", "11"} : json{"0", "1", "2"};
  j["config"] = config_json(cfg);
  j["rho"] = {{"re", re}, {"im", im}};
  j["populations"] = r.rho.populations();
  j["r1"] = r.r1;
  j["r_c"] = r.r_c;
  j["beta_V"] = vt.beta;
  j["T_V"] = vt.temperature() ? json(*vt.temperature()) : json(nullptr);
  j["Q_c"] = r.currents.q_c;
  j["Q_h"] = r.currents.q_h;
  j["Q_r"] = r.currents.q_r;
  j["efficiency"] = efficiency(cfg.spec);
  j["efficiency_realized"] = number_or_null(r.efficiency_realized);
  j["eta_C"] = number_or_null(carnot_efficiency(cfg.baths));
  j["cooling"] = r.cooling;
  j["residual"] = r.residual;
  j["max_coherence"] = r.max_coherence;
  j["entropy_production"] = r.entropy_production;
  j["rate_path_deviation"] = r.rate_path_deviation;
  j["closed_form_deviation"] = r.closed_form_deviation ? json(*r.closed_form_deviation) : json(nullptr);
  return j.dump(2);
}

std::string comparison_to_json(const ComparisonReport& c, const RunConfig& cfg) {
  json j;
  j["config"] = config_json(cfg);
  j["Q_c_two_qubit"] = c.q_c_two_qubit;
  j["Q_c_qutrit"] = c.q_c_qutrit;
  j["winner"] = std::string(winner_name(c.winner));
  j["qutrit_pc_scale"] = c.pc_scale;
  return j.dump(2);
}

std::string report_summary(const SteadyStateReport& r, const RunConfig& cfg) {
  const VirtualTemperature vt = virtual_temperature(cfg.spec, cfg.baths);
  std::ostringstream os;
  os.precision(10);
  os << "model            " << r.model << " (" << r.machine << ")\n";
  os << "r1               " << r.r1 << "\n";
  os << "r_c              " << r.r_c << "\n";
  if (vt.temperature()) {
    os << "T_V              " << *vt.temperature() << "\n";
  } else {
    os << "T_V              non-positive (beta_V = " << vt.beta << ")\n";
  }
  os << "Q_c              " << r.currents.q_c << "\n";
  os << "Q_h              " << r.currents.q_h << "\n";
  os << "Q_r              " << r.currents.q_r << "\n";
  os << "efficiency       " << efficiency(cfg.spec) << "\n";
  os << "eta_C            " << carnot_efficiency(cfg.baths) << "\n";
  os << "cooling          " << (r.cooling ? "true" : "false") << "\n";
  os << "residual         " << r.residual << "\n";
  return os.str();
}

std::string trajectory_csv(const Trajectory& traj, const Machine& machine, const RunConfig& cfg) {
  std::ostringstream os;
  os << "# thermoq evolve\n# config: " << to_json(cfg) << "\n";
  const std::size_t n = machine.dim();
  os << "t";
  for (std::size_t k = 0; k < n; ++k) os << ",P_" << machine.labels[k];
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (k != l) os << ",C_" << machine.labels[k] << "_" << machine.labels[l];
    }
  }
  os << "\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const Matrix& m = traj.states[i].matrix();
    os << csv_number(traj.times[i]);
    for (std::size_t k = 0; k < n; ++k) {
      os << ',' << csv_number(m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)).real());
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l) {
        if (k != l) os << ',' << csv_number(std::abs(m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l))));
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace thermoq
