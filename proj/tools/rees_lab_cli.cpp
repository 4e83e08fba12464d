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

// rees-lab command-line front end. Links only the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rees/rees_lab.h"

namespace {

// Exit codes: 0 pass, 1 verified failure, 2 usage or search error.
int finish(rl_status status, rl_report* report, rl_format format, const std::string& output) {
  if (report == nullptr) {
    std::cerr << "error: " << rl_last_error() << "\n";
    if (status == RL_SEARCH_CAP_EXCEEDED) std::cerr << "hint: raise --bfs-cap\n";
    return status == RL_VERIFIED_FAILURE ? 1 : 2;
  }
  char* text = nullptr;
  rl_status rs = rl_report_render(report, format, &text);
  if (rs != RL_OK) {
    std::cerr << "error: " << rl_last_error() << "\n";
    rl_report_free(report);
    return 2;
  }
  if (output.empty()) {
    std::fputs(text, stdout);
  } else {
    std::ofstream file(output);
    if (!file) {
      std::cerr << "error: cannot write " << output << "\n";
      rl_string_free(text);
      rl_report_free(report);
      return 2;
    }
    file << text;
  }
  std::fprintf(stderr, "elapsed_ms: %.1f\n", rl_report_elapsed_ms(report));
  rl_string_free(text);
  const int code = rl_report_passed(report) ? 0 : 1;
  rl_report_free(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rees ideals of monomial almost complete intersections"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  std::string output;
  rl_options opts{0, 0, 0, 0};
  app.add_option("--format", format_name, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", output, "write the report to a file");
  app.add_option("--t-bound", opts.t_bound, "T-degree bound for fiber sweeps");
  app.add_option("--g-bound", opts.g_bound, "ground-degree bound for fiber sweeps");
  app.add_option("--bfs-cap", opts.state_cap, "state cap for congruence searches");
  app.add_option("--threads", opts.workers, "worker threads (default REES_LAB_THREADS)");

  unsigned p1 = 0, p2 = 0, p3 = 0;

  auto* gens = app.add_subcommand("binary-gens", "generators of (x^d, y^d, x^b y^(d-b))");
  gens->add_option("d", p1)->required();
  gens->add_option("b", p2)->required();

  auto* verify = app.add_subcommand("binary-verify", "generation and minimality by fiber sweep");
  verify->add_option("d", p1)->required();
  verify->add_option("b", p2)->required();

  auto* lengths = app.add_subcommand("lengths", "length profile and Huckaba-Marley sum");
  lengths->add_option("d", p1)->required();
  lengths->add_option("b", p2)->required();

  std::vector<unsigned> red_a, red_b, uniform;
  unsigned r_cap = 0;
  bool verify_q = false, large_n = false;
  auto* red = app.add_subcommand("red", "reduction numbers");
  red->add_option("--a", red_a, "pure-power exponents, comma separated")->delimiter(',');
  red->add_option("--b", red_b, "mixed-monomial exponents, comma separated")->delimiter(',');
  red->add_option("--uniform", uniform, "n a b for (x_1^a, ..., x_n^a, (x_1...x_n)^b)")
      ->expected(3);
  red->add_option("--r-cap", r_cap, "largest reduction number tried");
  red->add_flag("--verify-q", verify_q, "check the binomial reduction by congruence walks");
  red->add_flag("--large-n", large_n, "allow the binomial check beyond n = 3");

  bool ternary_verify = false, ternary_lengths = false;
  auto* ternary = app.add_subcommand("ternary", "generators of (x^a, y^a, z^a, (xyz)^b)");
  ternary->add_option("a", p1)->required();
  ternary->add_option("b", p2)->required();
  ternary->add_flag("--verify", ternary_verify, "colon claims, enumeration and fiber sweep");
  ternary->add_flag("--lengths", ternary_lengths, "exploratory length profile");

  std::string suite_name;
  unsigned lo = 0, hi = 0, n_max = 0;
  bool no_generation = false;
  auto* sweep = app.add_subcommand("sweep", "batch runs over parameter ranges");
  sweep->add_option("suite", suite_name, "binary, lengths, reduction, ternary, uniform-conjecture")
      ->required()
      ->check(CLI::IsMember({"binary", "lengths", "reduction", "ternary", "uniform-conjecture"}));
  sweep->add_option("--lo", lo, "smallest d or a");
  sweep->add_option("--hi", hi, "largest d or a");
  sweep->add_option("--n-max", n_max, "largest number of variables");
  sweep->add_flag("--no-generation", no_generation, "skip fiber sweeps in the binary suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  rl_format format = RL_FORMAT_TEXT;
  if (format_name == "json") format = RL_FORMAT_JSON;
  if (format_name == "csv") format = RL_FORMAT_CSV;

  rl_report* report = nullptr;
  rl_status status = RL_OK;
  if (*gens) {
    status = rl_binary_gens(p1, p2, &report);
  } else if (*verify) {
    status = rl_binary_verify(p1, p2, &opts, &report);
  } else if (*lengths) {
    status = rl_lengths(p1, p2, &report);
  } else if (*red) {
    if (!uniform.empty()) {
      p3 = uniform[2];
      status = rl_reduction_uniform(uniform[0], uniform[1], p3, verify_q, large_n, &opts, &report);
    } else {
      if (red_a.empty() || red_a.size() != red_b.size()) {
        std::cerr << "error: give --uniform n a b, or --a and --b of equal length\n";
        return 2;
      }
      status = rl_reduction(red_a.data(), red_b.data(), red_a.size(), r_cap, &report);
    }
  } else if (*ternary) {
    status = rl_ternary(p1, p2, ternary_verify, ternary_lengths, &opts, &report);
  } else if (*sweep) {
    rl_suite suite = RL_SUITE_BINARY;
    if (suite_name == "lengths") suite = RL_SUITE_LENGTHS;
    if (suite_name == "reduction") suite = RL_SUITE_REDUCTION;
    if (suite_name == "ternary") suite = RL_SUITE_TERNARY;
    if (suite_name == "uniform-conjecture") suite = RL_SUITE_UNIFORM_CONJECTURE;
    status = rl_sweep(suite, lo, hi, n_max, !no_generation, &opts, &report);
  }
  return finish(status, report, format, output);
}
