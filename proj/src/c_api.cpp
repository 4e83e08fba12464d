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

#include "rees/rees_lab.h"

#include <cstring>
#include <exception>
#include <string>

#include "rees/binary.hpp"
#include "rees/commands.hpp"
#include "rees/errors.hpp"
#include "rees/report.hpp"

struct rl_report {
  rees::Report report;
};

struct rl_sigma {
  rees::SigmaSet sigma;
};

namespace {

thread_local std::string g_last_error;

rl_status fail(rl_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs fn, mapping library exceptions onto status codes.
template <class Fn>
rl_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const rees::SearchCapExceeded& e) {
    return fail(RL_SEARCH_CAP_EXCEEDED, e.what());
  } catch (const rees::ParseError& e) {
    return fail(RL_PARSE_ERROR, e.what());
  } catch (const rees::InvalidArgument& e) {
    return fail(RL_INVALID_ARGUMENT, e.what());
  } catch (const rees::ExponentOverflow& e) {
    return fail(RL_INVALID_ARGUMENT, e.what());
  } catch (const rees::VerificationFailure& e) {
    return fail(RL_VERIFIED_FAILURE, e.what());
  } catch (const std::exception& e) {
    return fail(RL_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(RL_INTERNAL_ERROR, "unknown error");
  }
}

rees::VerifyOptions to_options(const rl_options* o) {
  rees::VerifyOptions v;
  if (o == nullptr) return v;
  if (o->t_bound) v.t_bound = o->t_bound;
  if (o->g_bound) v.g_bound = o->g_bound;
  if (o->state_cap) v.cap = o->state_cap;
  if (o->workers) v.engine.workers = o->workers;
  return v;
}

template <class Fn>
rl_status run(rl_report** out, Fn&& fn) {
  if (out == nullptr) return fail(RL_INVALID_ARGUMENT, "null output handle");
  *out = nullptr;
  return guarded([&] {
    auto* handle = new rl_report{fn()};
    *out = handle;
    if (handle->report.passed) return RL_OK;
    return fail(RL_VERIFIED_FAILURE, handle->report.command + ": verification failed");
  });
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* rl_last_error(void) { return g_last_error.c_str(); }

const char* rl_status_name(rl_status status) {
  switch (status) {
    case RL_OK: return "ok";
    case RL_VERIFIED_FAILURE: return "verified failure";
    case RL_INVALID_ARGUMENT: return "invalid argument";
    case RL_SEARCH_CAP_EXCEEDED: return "search cap exceeded";
    case RL_PARSE_ERROR: return "parse error";
    case RL_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

rl_status rl_binary_gens(unsigned d, unsigned b, rl_report** out) {
  return run(out, [&] { return rees::cmd_binary_gens(d, b); });
}

rl_status rl_binary_verify(unsigned d, unsigned b, const rl_options* options, rl_report** out) {
  return run(out, [&] { return rees::cmd_binary_verify(d, b, to_options(options)); });
}

rl_status rl_lengths(unsigned d, unsigned b, rl_report** out) {
  return run(out, [&] { return rees::cmd_lengths(d, b); });
}

rl_status rl_reduction(const unsigned* a, const unsigned* b, size_t n, unsigned r_cap,
                       rl_report** out) {
  if (a == nullptr || b == nullptr) return fail(RL_INVALID_ARGUMENT, "null exponent array");
  return run(out, [&] {
    return rees::cmd_red(std::vector<unsigned>(a, a + n), std::vector<unsigned>(b, b + n), r_cap);
  });
}

rl_status rl_reduction_uniform(unsigned n, unsigned a, unsigned b, int verify_q,
                               int allow_large_n, const rl_options* options, rl_report** out) {
  return run(out, [&] {
    return rees::cmd_red_uniform(n, a, b, verify_q != 0, to_options(options).cap,
                                 allow_large_n != 0);
  });
}

rl_status rl_ternary(unsigned a, unsigned b, int verify, int exploratory_lengths,
                     const rl_options* options, rl_report** out) {
  return run(out, [&] {
    return rees::cmd_ternary(a, b, verify != 0, to_options(options), exploratory_lengths != 0);
  });
}

rl_status rl_sweep(rl_suite suite, unsigned lo, unsigned hi, unsigned n_max, int generation,
                   const rl_options* options, rl_report** out) {
  return run(out, [&] {
    rees::SweepOptions s;
    switch (suite) {
      case RL_SUITE_BINARY: s.suite = rees::SweepSuite::kBinary; break;
      case RL_SUITE_LENGTHS: s.suite = rees::SweepSuite::kLengths; break;
      case RL_SUITE_REDUCTION: s.suite = rees::SweepSuite::kReduction; break;
      case RL_SUITE_TERNARY: s.suite = rees::SweepSuite::kTernary; break;
      case RL_SUITE_UNIFORM_CONJECTURE: s.suite = rees::SweepSuite::kUniformConjecture; break;
      default: throw rees::InvalidArgument("unknown sweep suite");
    }
    if (lo) s.lo = lo;
    if (hi) s.hi = hi;
    if (n_max) s.n_max = n_max;
    s.generation = generation != 0;
    s.verify = to_options(options);
    return rees::cmd_sweep(s);
  });
}

int rl_report_passed(const rl_report* report) {
  return report != nullptr && report->report.passed ? 1 : 0;
}

double rl_report_elapsed_ms(const rl_report* report) {
  return report != nullptr ? report->report.elapsed_ms : 0.0;
}

rl_status rl_report_render(const rl_report* report, rl_format format, char** out) {
  if (report == nullptr || out == nullptr) return fail(RL_INVALID_ARGUMENT, "null handle");
  *out = nullptr;
  return guarded([&] {
    rees::Format f = rees::Format::kText;
    if (format == RL_FORMAT_JSON) f = rees::Format::kJson;
    if (format == RL_FORMAT_CSV) f = rees::Format::kCsv;
    *out = copy_string(rees::render(report->report, f));
    return RL_OK;
  });
}

rl_status rl_report_parse_json(const char* text, rl_report** out) {
  if (text == nullptr || out == nullptr) return fail(RL_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new rl_report{rees::report_from_json(text)};
    return RL_OK;
  });
}

int rl_report_equal(const rl_report* a, const rl_report* b) {
  if (a == nullptr || b == nullptr) return 0;
  return a->report == b->report ? 1 : 0;
}

void rl_report_free(rl_report* report) { delete report; }

void rl_string_free(char* text) { delete[] text; }

rl_status rl_sigma_create(unsigned d, unsigned b, rl_sigma** out) {
  if (out == nullptr) return fail(RL_INVALID_ARGUMENT, "null output handle");
  *out = nullptr;
  return guarded([&] {
    *out = new rl_sigma{rees::sigma_set(d, b)};
    return RL_OK;
  });
}

size_t rl_sigma_size(const rl_sigma* sigma) {
  return sigma != nullptr ? sigma->sigma.entries.size() : 0;
}

rl_status rl_sigma_entry(const rl_sigma* sigma, size_t i, char** out) {
  if (sigma == nullptr || out == nullptr) return fail(RL_INVALID_ARGUMENT, "null handle");
  if (i >= sigma->sigma.entries.size()) return fail(RL_INVALID_ARGUMENT, "index out of range");
  return guarded([&] {
    *out = copy_string(rees::to_string(sigma->sigma.entries[i].binomial));
    return RL_OK;
  });
}

rl_status rl_sigma_origin(const rl_sigma* sigma, size_t i, rl_origin* out) {
  if (sigma == nullptr || out == nullptr) return fail(RL_INVALID_ARGUMENT, "null handle");
  if (i >= sigma->sigma.entries.size()) return fail(RL_INVALID_ARGUMENT, "index out of range");
  switch (sigma->sigma.entries[i].origin) {
    case rees::SigmaOrigin::kSyzygy: *out = RL_ORIGIN_SYZYGY; break;
    case rees::SigmaOrigin::kSylvester: *out = RL_ORIGIN_SYLVESTER; break;
    case rees::SigmaOrigin::kImplicit: *out = RL_ORIGIN_IMPLICIT; break;
  }
  return RL_OK;
}

void rl_sigma_free(rl_sigma* sigma) { delete sigma; }

}  // extern "C"
