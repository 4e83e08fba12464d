// Copyright 2026 The rees-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface of the rees-lab shared library.
 *
 * Every entry point returns an rl_status; results come back through opaque
 * handles owned by the caller. On failure, rl_last_error() describes the
 * problem for the calling thread. */

#ifndef REES_LAB_H_
#define REES_LAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RL_API __declspec(dllexport)
#else
#define RL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rl_status {
  RL_OK = 0,
  RL_VERIFIED_FAILURE = 1,
  RL_INVALID_ARGUMENT = 2,
  RL_SEARCH_CAP_EXCEEDED = 3,
  RL_PARSE_ERROR = 4,
  RL_INTERNAL_ERROR = 5
} rl_status;

typedef enum rl_format { RL_FORMAT_TEXT = 0, RL_FORMAT_JSON = 1, RL_FORMAT_CSV = 2 } rl_format;

typedef enum rl_origin { RL_ORIGIN_SYZYGY = 0, RL_ORIGIN_SYLVESTER = 1, RL_ORIGIN_IMPLICIT = 2 } rl_origin;

typedef enum rl_suite {
  RL_SUITE_BINARY = 0,
  RL_SUITE_LENGTHS = 1,
  RL_SUITE_REDUCTION = 2,
  RL_SUITE_TERNARY = 3,
  RL_SUITE_UNIFORM_CONJECTURE = 4
} rl_suite;

typedef struct rl_report rl_report;
typedef struct rl_sigma rl_sigma;

/* Search knobs. Zero fields take the documented defaults: T-degree bound
 * d + 1 (binary) or 4 (ternary), ground bound 3d or 3a, a state cap of 10^6
 * and REES_LAB_THREADS workers. */
typedef struct rl_options {
  unsigned t_bound;
  unsigned g_bound;
  size_t state_cap;
  unsigned workers;
} rl_options;

/* Message for the last failed call on this thread; never NULL. */
RL_API const char* rl_last_error(void);
RL_API const char* rl_status_name(rl_status status);

/* Commands. A report is produced whenever the arguments were valid, including
 * when a verification failed; in that case the status is
 * RL_VERIFIED_FAILURE. */
RL_API rl_status rl_binary_gens(unsigned d, unsigned b, rl_report** out);
RL_API rl_status rl_binary_verify(unsigned d, unsigned b, const rl_options* options,
                                  rl_report** out);
RL_API rl_status rl_lengths(unsigned d, unsigned b, rl_report** out);
RL_API rl_status rl_reduction(const unsigned* a, const unsigned* b, size_t n, unsigned r_cap,
                              rl_report** out);
RL_API rl_status rl_reduction_uniform(unsigned n, unsigned a, unsigned b, int verify_q,
                                      int allow_large_n, const rl_options* options,
                                      rl_report** out);
RL_API rl_status rl_ternary(unsigned a, unsigned b, int verify, int exploratory_lengths,
                            const rl_options* options, rl_report** out);
/* lo = hi = 0 selects the suite's default range. */
RL_API rl_status rl_sweep(rl_suite suite, unsigned lo, unsigned hi, unsigned n_max,
                          int generation, const rl_options* options, rl_report** out);

/* Reports. */
RL_API int rl_report_passed(const rl_report* report);
RL_API double rl_report_elapsed_ms(const rl_report* report);
/* Rendered body; release with rl_string_free. */
RL_API rl_status rl_report_render(const rl_report* report, rl_format format, char** out);
RL_API rl_status rl_report_parse_json(const char* text, rl_report** out);
/* 1 when the canonical bodies agree (timing ignored). */
RL_API int rl_report_equal(const rl_report* a, const rl_report* b);
RL_API void rl_report_free(rl_report* report);
RL_API void rl_string_free(char* text);

/* The generator set of (x^d, y^d, x^b y^(d-b)), gcd(d, b) = 1. */
RL_API rl_status rl_sigma_create(unsigned d, unsigned b, rl_sigma** out);
RL_API size_t rl_sigma_size(const rl_sigma* sigma);
/* Binomial text of entry i; release with rl_string_free. */
RL_API rl_status rl_sigma_entry(const rl_sigma* sigma, size_t i, char** out);
RL_API rl_status rl_sigma_origin(const rl_sigma* sigma, size_t i, rl_origin* out);
RL_API void rl_sigma_free(rl_sigma* sigma);

#ifdef __cplusplus
}
#endif

#endif /* REES_LAB_H_ */
