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

// The operations behind each CLI subcommand, returning structured reports.

#ifndef REES_COMMANDS_HPP_
#define REES_COMMANDS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rees/report.hpp"
#include "rees/toric.hpp"

namespace rees {

struct VerifyOptions {
  std::optional<unsigned> t_bound;
  std::optional<unsigned> g_bound;
  std::size_t cap = kDefaultStateCap;
  EngineOptions engine;
};

Report cmd_binary_gens(unsigned d, unsigned b);
Report cmd_binary_verify(unsigned d, unsigned b, const VerifyOptions& options = {});
Report cmd_lengths(unsigned d, unsigned b);
Report cmd_red(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
               unsigned r_cap = 0);
Report cmd_red_uniform(unsigned n, unsigned a, unsigned b, bool verify_q,
                       std::size_t cap = kDefaultStateCap, bool allow_large_n = false);
Report cmd_ternary(unsigned a, unsigned b, bool verify, const VerifyOptions& options = {},
                   bool exploratory_lengths = false);

enum class SweepSuite { kBinary, kLengths, kReduction, kTernary, kUniformConjecture };
std::optional<SweepSuite> parse_suite(const std::string& name);
std::string to_string(SweepSuite suite);

struct SweepOptions {
  SweepSuite suite = SweepSuite::kBinary;
  // Range of d (binary, lengths) or a (reduction, ternary, uniform).
  std::optional<unsigned> lo;
  std::optional<unsigned> hi;
  unsigned n_max = 4;
  // Binary suite: run the fiber checks (generation, removals, brute force).
  bool generation = true;
  VerifyOptions verify;
};

Report cmd_sweep(const SweepOptions& options);

}  // namespace rees

#endif  // REES_COMMANDS_HPP_
