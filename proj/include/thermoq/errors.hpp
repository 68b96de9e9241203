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

#include <stdexcept>
#include <string>

namespace thermoq {

// Inputs that violate a documented invariant (bad parameters, malformed config).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Steady-state solve could not produce a unique, diagonal stationary state.
class DegenerateGeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Root or optimum search found nothing inside the admissible range.
class SearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Time integration could not keep the state physical even after step halving.
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace thermoq
