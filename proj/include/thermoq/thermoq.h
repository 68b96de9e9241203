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

// C interface to the thermoq library. All handles are opaque; every fallible
// call returns a thermoq_status and leaves a message in thermoq_last_error().
// Strings returned through char** are owned by the caller and released with
// thermoq_free_string().
#pragma once

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(THERMOQ_BUILDING_LIBRARY)
#define THERMOQ_API __declspec(dllexport)
#else
#define THERMOQ_API __declspec(dllimport)
#endif
#else
#define THERMOQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct thermoq_config thermoq_config;
typedef struct thermoq_report thermoq_report;

typedef enum thermoq_status {
  THERMOQ_OK = 0,
  THERMOQ_ERR_INTERNAL = 1,
  THERMOQ_ERR_VALIDATION = 2,
  THERMOQ_ERR_DEGENERATE = 3,
  THERMOQ_ERR_SEARCH = 4,
  THERMOQ_ERR_IO = 5
} thermoq_status;

// Comparison outcome codes.
enum { THERMOQ_WINNER_TWO_QUBIT = 0, THERMOQ_WINNER_QUTRIT = 1, THERMOQ_WINNER_TIE = 2 };

THERMOQ_API const char* thermoq_version(void);
// Message of the last failed call on this thread; "" if none.
THERMOQ_API const char* thermoq_last_error(void);
THERMOQ_API void thermoq_free_string(char* s);

// ---- configuration ----
// New config holding the case-study defaults.
THERMOQ_API thermoq_status thermoq_config_new(thermoq_config** out);
THERMOQ_API void thermoq_config_free(thermoq_config* config);
THERMOQ_API thermoq_status thermoq_config_load_json(thermoq_config* config, const char* path);
// `source` labels error messages; may be NULL.
THERMOQ_API thermoq_status thermoq_config_parse_json(thermoq_config* config, const char* text,
                                                     const char* source);
// Sets one field from text ("T_h", "20"). `origin` labels error messages; may be NULL.
THERMOQ_API thermoq_status thermoq_config_set(thermoq_config* config, const char* key, const char* value,
                                              const char* origin);
THERMOQ_API thermoq_status thermoq_config_get(const thermoq_config* config, const char* key, double* out);
THERMOQ_API thermoq_status thermoq_config_validate(const thermoq_config* config);
THERMOQ_API thermoq_status thermoq_config_to_json(const thermoq_config* config, char** out);

// ---- steady state ----
THERMOQ_API thermoq_status thermoq_steady(const thermoq_config* config, thermoq_report** out);
// Scalar quantities: r1, r_c, Q_c, Q_h, Q_r, efficiency_realized, cooling,
// residual, max_coherence, entropy_production, rate_path_deviation,
// closed_form_deviation, Q_c_qutrit (compare model only).
THERMOQ_API thermoq_status thermoq_report_get(const thermoq_report* report, const char* quantity,
                                              double* out);
// Copies up to `capacity` diagonal entries; `*count` receives the dimension.
THERMOQ_API thermoq_status thermoq_report_populations(const thermoq_report* report, double* out,
                                                      size_t capacity, size_t* count);
THERMOQ_API thermoq_status thermoq_report_json(const thermoq_report* report, char** out);
THERMOQ_API thermoq_status thermoq_report_summary(const thermoq_report* report, char** out);
THERMOQ_API void thermoq_report_free(thermoq_report* report);

// ---- experiments ----
THERMOQ_API thermoq_status thermoq_evolve_csv(const thermoq_config* config, char** csv);
// `sweep` overrides the config's sweep when non-NULL. threads == 0 uses all cores.
// `svg` may be NULL when no plot is wanted.
THERMOQ_API thermoq_status thermoq_sweep(const thermoq_config* config, const char* sweep, unsigned threads,
                                         char** csv, char** svg);
THERMOQ_API thermoq_status thermoq_optimize_e2(const thermoq_config* config, double* e2_opt,
                                               double* q_c_opt, char** json);
THERMOQ_API thermoq_status thermoq_optimize_e2_scan(const thermoq_config* config, const char* t_h_grid,
                                                    unsigned threads, char** csv);
THERMOQ_API thermoq_status thermoq_carnot(const thermoq_config* config, int* passed, char** json);
THERMOQ_API thermoq_status thermoq_compare(const thermoq_config* config, int* winner, char** json);
THERMOQ_API thermoq_status thermoq_compare_search(const thermoq_config* config, int draws, uint64_t seed,
                                                  char** json);

#ifdef __cplusplus
}
#endif
