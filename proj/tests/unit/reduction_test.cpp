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

#include <numeric>

#include <gtest/gtest.h>

#include "rees/errors.hpp"
#include "rees/reduction.hpp"

namespace rees {
namespace {

TEST(MonomialReductionTest, Examples) {
  EXPECT_EQ(is_monomial_reduction({{14, 14}, {3, 11}}).r, 13u);
  EXPECT_EQ(is_monomial_reduction({{2, 2}, {1, 1}}).r, 1u);
  EXPECT_EQ(is_monomial_reduction({{5, 5, 5}, {2, 2, 2}}).r, 2u);
}

TEST(MonomialReductionTest, BelowOneIsUndecided) {
  const ReductionResult r = is_monomial_reduction({{4, 4}, {1, 1}});
  EXPECT_FALSE(r.r.has_value());
  EXPECT_TRUE(r.below_one);
  EXPECT_EQ(r.cap, 16u);
}

TEST(MonomialReductionTest, WitnessIsConsistent) {
  const ReductionResult r = is_monomial_reduction({{14, 14}, {3, 11}});
  ASSERT_EQ(r.witness.size(), 2u);
  // The witness splits r + 1 among the pure powers.
  EXPECT_EQ(std::accumulate(r.witness.begin(), r.witness.end(), 0u), *r.r + 1);
  EXPECT_GE(r.support, 2u);
}

TEST(MonomialReductionTest, RejectsBadSpecs) {
  EXPECT_THROW(is_monomial_reduction({{4, 4}, {4, 1}}), InvalidArgument);
  EXPECT_THROW(is_monomial_reduction({{4, 4}, {1}}), InvalidArgument);
  EXPECT_THROW(is_monomial_reduction({{4}, {1}}), InvalidArgument);
}

TEST(ReductionPropertyTest, BinaryIsDMinusOne) {
  for (unsigned d = 2; d <= 20; ++d) {
    for (unsigned b = 1; b < d; ++b) {
      if (std::gcd(d, b) != 1) continue;
      EXPECT_EQ(is_monomial_reduction({{d, d}, {b, d - b}}).r, d - 1) << d << "," << b;
    }
  }
}

TEST(ReductionPropertyTest, FloorSumAgreesWithSearch) {
  for (unsigned a1 = 2; a1 <= 7; ++a1) {
    for (unsigned a2 = 2; a2 <= 7; ++a2) {
      for (unsigned b1 = 1; b1 < a1; ++b1) {
        for (unsigned b2 = 1; b2 < a2; ++b2) {
          const AciSpec spec{{a1, a2}, {b1, b2}};
          EXPECT_EQ(is_monomial_reduction(spec).r, red_search_general(spec).r);
        }
      }
    }
  }
}

TEST(UniformReductionTest, Examples) {
  const UniformReduction j = red_uniform(3, 5, 2);
  EXPECT_EQ(j.kind, ReductionKind::kMonomial);
  EXPECT_EQ(j.red, 2u);
  const UniformReduction q = red_uniform(3, 7, 2);
  EXPECT_EQ(q.kind, ReductionKind::kBinomial);
  EXPECT_EQ(q.red, 2u);
  EXPECT_EQ(red_uniform(2, 2, 1).red, 1u);
}

TEST(UniformReductionTest, MatchesExhaustiveSearch) {
  for (unsigned n = 2; n <= 4; ++n) {
    for (unsigned a = 2; a <= 12; ++a) {
      for (unsigned b = 1; b < a; ++b) {
        if (n * b < a) continue;
        const AciSpec spec{std::vector<unsigned>(n, a), std::vector<unsigned>(n, b)};
        EXPECT_EQ(red_uniform(n, a, b).red, red_search_general(spec).r) << n << a << b;
      }
    }
  }
}

TEST(QReductionTest, Examples) {
  const QReductionReport four = verify_q_reduction(3, 4, 1);
  EXPECT_TRUE(four.power_contained);
  EXPECT_TRUE(four.witness_excluded);
  EXPECT_TRUE(verify_q_reduction(3, 7, 2).pass());
  EXPECT_TRUE(verify_q_reduction(3, 5, 1).pass());
  EXPECT_THROW(verify_q_reduction(3, 3, 1), InvalidArgument);
  EXPECT_THROW(verify_q_reduction(4, 9, 1), InvalidArgument);
}

}  // namespace
}  // namespace rees
