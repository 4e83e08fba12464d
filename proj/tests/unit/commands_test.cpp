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

#include <gtest/gtest.h>

#include "rees/commands.hpp"
#include "rees/errors.hpp"
#include "rees/report.hpp"

namespace rees {
namespace {

TEST(ReportTest, JsonRoundTrip) {
  for (const Report& r : {cmd_binary_gens(14, 3), cmd_lengths(7, 3), cmd_red({14, 14}, {3, 11}),
                          cmd_ternary(5, 2, false)}) {
    const Report back = report_from_json(render(r, Format::kJson));
    EXPECT_EQ(back, r) << r.command;
    EXPECT_EQ(to_json(back)["schema"], kSchema);
  }
}

TEST(ReportTest, ParseErrors) {
  EXPECT_THROW(report_from_json("{"), ParseError);
  EXPECT_THROW(report_from_json(R"({"schema": "other/9"})"), ParseError);
}

TEST(ReportTest, TextVerdictAndCsv) {
  const Report r = cmd_lengths(7, 3);
  const std::string text = render(r, Format::kText);
  EXPECT_NE(text.find("command: lengths"), std::string::npos);
  EXPECT_NE(text.find("verdict: PASS"), std::string::npos);
  const std::string csv = render(r, Format::kCsv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "ell,s,t,lambda");
  EXPECT_NE(csv.find("\n1,4,3,12\n"), std::string::npos);
}

TEST(CommandsTest, BinaryGens) {
  const Report r = cmd_binary_gens(14, 3);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.results["count"], 8);
  EXPECT_EQ(r.results["count_formula"], 8);
  EXPECT_THROW(cmd_binary_gens(3, 3), InvalidArgument);
}

TEST(CommandsTest, BinaryGensReparametrizes) {
  const Report r = cmd_binary_gens(6, 2);
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.results.contains("reparametrized"));
  EXPECT_EQ(r.results["count"], 4);
  EXPECT_FALSE(r.findings.empty());
}

TEST(CommandsTest, BinaryVerify) {
  EXPECT_TRUE(cmd_binary_verify(2, 1).passed);
  EXPECT_TRUE(cmd_binary_verify(7, 3).passed);
}

TEST(CommandsTest, Lengths) {
  const Report r = cmd_lengths(7, 3);
  EXPECT_EQ(r.results["hm_sum"], 21);
  EXPECT_EQ(r.results["ell0"], 2);
  EXPECT_EQ(cmd_lengths(2, 1).results["hm_sum"], 1);
  const Report fourteen = cmd_lengths(14, 3);
  EXPECT_EQ(fourteen.results["table"][0]["s"], 11);
  EXPECT_EQ(fourteen.results["table"][0]["t"], 3);
  const Report swapped = cmd_lengths(7, 4);
  EXPECT_EQ(swapped.results, r.results);
  EXPECT_FALSE(swapped.findings.empty());
}

TEST(CommandsTest, Reduction) {
  EXPECT_EQ(cmd_red({14, 14}, {3, 11}).results["floor_sum"]["red"], 13);
  const Report undecided = cmd_red({4, 4}, {1, 1});
  EXPECT_EQ(undecided.results["floor_sum"]["red"], "undecided");
  EXPECT_TRUE(undecided.passed);
  EXPECT_FALSE(undecided.findings.empty());
  const Report uniform = cmd_red_uniform(3, 5, 2, false);
  EXPECT_EQ(uniform.results["red"], 2);
  EXPECT_EQ(uniform.results["kind"], "J");
  const Report q = cmd_red_uniform(3, 7, 2, true);
  EXPECT_EQ(q.results["kind"], "Q");
  EXPECT_TRUE(q.passed);
}

TEST(CommandsTest, Ternary) {
  EXPECT_TRUE(cmd_ternary(5, 2, true).passed);
  EXPECT_EQ(cmd_ternary(7, 2, false).results["regime"], "E' (a > 3b)");
  EXPECT_THROW(cmd_ternary(4, 2, false), InvalidArgument);
}

TEST(CommandsTest, SmallSweeps) {
  SweepOptions opts;
  opts.suite = SweepSuite::kBinary;
  opts.lo = 2;
  opts.hi = 6;
  const Report binary = cmd_sweep(opts);
  EXPECT_TRUE(binary.passed);
  EXPECT_EQ(render_csv(binary).substr(0, 7), "d,b,cou");
  opts.suite = SweepSuite::kTernary;
  opts.lo = 3;
  opts.hi = 5;
  EXPECT_TRUE(cmd_sweep(opts).passed);
  EXPECT_EQ(parse_suite("uniform-conjecture"), SweepSuite::kUniformConjecture);
  EXPECT_FALSE(parse_suite("bogus").has_value());
}

}  // namespace
}  // namespace rees
