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

#include <string>

#include "thermoq/config.hpp"
#include "thermoq/qutrit.hpp"
#include "thermoq/solve.hpp"

namespace thermoq {

// Fixed 17-significant-digit scientific notation ("nan", "inf", "-inf" for non-finite).
std::string csv_number(double v);

// Steady-state report as a JSON object, with the resolved config echoed under "config".
std::string report_to_json(const SteadyStateReport& report, const RunConfig& config);
std::string comparison_to_json(const ComparisonReport& cmp, const RunConfig& config);

// Multi-line human-readable summary.
std::string report_summary(const SteadyStateReport& report, const RunConfig& config);

// t, populations, then |rho_kl| for every k != l in row-major order.
std::string trajectory_csv(const Trajectory& traj, const Machine& machine, const RunConfig& config);

}  // namespace thermoq
