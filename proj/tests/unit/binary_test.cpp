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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "rees/binary.hpp"
#include "rees/errors.hpp"
#include "rees/toric.hpp"

namespace rees {
namespace {

Monomial bin(Exponent x, Exponent y, Exponent t, Exponent u, Exponent v) {
  return Monomial::with_rees({x, y}, {t, u, v});
}

std::set<Binomial, BinomialLess> as_set(const std::vector<Binomial>& v) {
  return {v.begin(), v.end()};
}

TEST(EuclidTest, FourteenThree) {
  const EuclidData e = euclid_sequence(14, 3);
  EXPECT_EQ(e.quotients(), (std::vector<unsigned>{4, 1, 2}));
  EXPECT_EQ(e.remainders(), (std::vector<unsigned>{2, 1}));
  EXPECT_EQ(e.continuants(), (std::vector<std::uint64_t>{0, 1, 4, 5, 14}));
}

TEST(EuclidTest, SmallCases) {
  const EuclidData two = euclid_sequence(2, 1);
  EXPECT_EQ(two.quotients(), (std::vector<unsigned>{2}));
  EXPECT_EQ(two.continuants(), (std::vector<std::uint64_t>{0, 1, 2}));
  const EuclidData seven = euclid_sequence(7, 3);
  EXPECT_EQ(seven.remainders(), (std::vector<unsigned>{1}));
  EXPECT_EQ(seven.quotients(), (std::vector<unsigned>{2, 3}));
  EXPECT_EQ(seven.continuants(), (std::vector<std::uint64_t>{0, 1, 2, 7}));
  EXPECT_THROW(euclid_sequence(6, 4), InvalidArgument);
  EXPECT_THROW(euclid_sequence(3, 3), InvalidArgument);
}

TEST(EuclidPropertyTest, Recurrences) {
  for (unsigned d = 2; d <= 30; ++d) {
    for (unsigned b = 1; b < d; ++b) {
      if (std::gcd(d, b) != 1) continue;
      const EuclidData e(d, b);
      const int s2 = static_cast<int>(e.steps());
      for (int k = 1; k <= s2; ++k) {
        EXPECT_EQ(e.remainder(k - 2), e.quotient(k) * e.remainder(k - 1) + e.remainder(k));
        EXPECT_EQ(e.continuant(k), e.quotient(k) * e.continuant(k - 1) + e.continuant(k - 2));
      }
      EXPECT_EQ(e.continuant(s2), d);
    }
  }
}

TEST(GeneratorTest, ExponentExamples) {
  const EuclidData e = euclid_sequence(14, 3);
  EXPECT_EQ(pk_qk(e, 1, 1).value, 1u);
  EXPECT_EQ(pk_qk(e, 2, 1).value, 4u);
  EXPECT_EQ(pk_qk(e, 3, 2).value, 3u);
}

TEST(GeneratorTest, ClosedForms) {
  const EuclidData e = euclid_sequence(14, 3);
  EXPECT_EQ(make_generator(e, 1, 1), Binomial(bin(11, 0, 0, 0, 1), bin(0, 11, 1, 0, 0)));
  EXPECT_EQ(make_generator(e, 2, 1), Binomial(bin(0, 1, 0, 0, 5), bin(1, 0, 1, 4, 0)));
  EXPECT_EQ(to_string(make_generator(e, 3, 2)), "t^3*u^11 - v^14");
  EXPECT_THROW(make_generator(e, 1, 5), InvalidArgument);
}

TEST(GeneratorPropertyTest, IntegralityAndBounds) {
  for (unsigned d = 2; d <= 30; ++d) {
    for (unsigned b = 1; b < d; ++b) {
      if (std::gcd(d, b) != 1) continue;
      const EuclidData e(d, b);
      for (unsigned k = 1; k <= e.steps(); ++k) {
        for (unsigned i = 1; i <= e.quotient(static_cast<int>(k)); ++i) {
          const ExponentCheck c = pk_qk(e, k, i);
          EXPECT_LE(c.value, c.bound);
          EXPECT_EQ(c.bound, i * e.continuant(static_cast<int>(k) - 1) +
                                 e.continuant(static_cast<int>(k) - 2));
        }
      }
    }
  }
}

TEST(SylvesterTest, SecondForm) {
  const EuclidData e = euclid_sequence(7, 3);
  const Binomial f = make_generator(e, 1, 1);
  const Binomial g = make_generator(e, 0, 0);
  const Pivot p{Monomial::ground_only({3, 0}).lifted(2, 3), Monomial::ground_only({0, 3}).lifted(2, 3)};
  EXPECT_EQ(sylvester_det(f, g, p), Binomial(bin(1, 0, 0, 0, 2), bin(0, 1, 1, 1, 0)));
  EXPECT_TRUE(cramer_identities_hold(f, g, p));
}

TEST(SylvesterTest, PivotMustDivide) {
  const Binomial f(bin(0, 0, 0, 0, 2), bin(0, 0, 1, 1, 0));
  const Binomial g(bin(0, 1, 0, 0, 1), bin(1, 0, 0, 1, 0));
  const Pivot p{bin(1, 0, 0, 0, 0), bin(0, 1, 0, 0, 0)};
  EXPECT_THROW(sylvester_det(f, g, p), InvalidArgument);
}

TEST(SigmaTest, FourteenThreeGolden) {
  const SigmaSet sigma = sigma_set(14, 3);
  const std::vector<std::string> expected{
      "y^3*v - x^3*u",        "y^11*t - x^11*v",     "y^8*t*u - x^8*v^2", "y^5*t*u^2 - x^5*v^3",
      "y^2*t*u^3 - x^2*v^4", "x*t*u^4 - y*v^5",     "y*t^2*u^7 - x*v^9", "t^3*u^11 - v^14"};
  std::vector<Binomial> want;
  for (const auto& s : expected) want.push_back(parse_binomial(s, 2, 3));
  EXPECT_EQ(as_set(sigma.binomials()), as_set(want));
  EXPECT_EQ(sigma.entries.size(), 8u);
  EXPECT_EQ(sigma.entries.back().origin, SigmaOrigin::kImplicit);
}

TEST(SigmaTest, SmallSets) {
  const auto two = sigma_set(2, 1).binomials();
  EXPECT_EQ(as_set(two), as_set({parse_binomial("y*v - x*u", 2, 3), parse_binomial("x*v - y*t", 2, 3),
                                 parse_binomial("v^2 - t*u", 2, 3)}));
  EXPECT_EQ(sigma_set(7, 2).entries.size(), 6u);
}

TEST(SigmaTest, TelescopicPrefixes) {
  const SigmaSet sigma = sigma_set(14, 3);
  const auto t0 = telescopic_subideal(sigma, 0);
  ASSERT_EQ(t0.size(), 1u);
  EXPECT_EQ(t0[0], make_generator(sigma.euclid, 0, 0));
  EXPECT_EQ(telescopic_subideal(sigma, 1).size(), 5u);
  EXPECT_EQ(as_set(telescopic_subideal(sigma, sigma.euclid.steps())), as_set(sigma.binomials()));
}

TEST(SigmaPropertyTest, CountKernelAndIterativity) {
  for (unsigned d = 2; d <= 30; ++d) {
    for (unsigned b = 1; b < d; ++b) {
      if (std::gcd(d, b) != 1) continue;
      const SigmaSet sigma = sigma_set(d, b);
      const auto& q = sigma.euclid.quotients();
      EXPECT_EQ(sigma.entries.size(), 1u + std::accumulate(q.begin(), q.end(), 0u));
      const ReesMap map = ReesMap::binary(d, b);
      for (const SigmaEntry& entry : sigma.entries) {
        EXPECT_TRUE(map.is_kernel_binomial(entry.binomial)) << d << "," << b;
        if (entry.origin == SigmaOrigin::kSyzygy) continue;
        ASSERT_TRUE(entry.predecessors && entry.pivot);
        const auto [i, j] = *entry.predecessors;
        EXPECT_EQ(sylvester_det(sigma.entries[i].binomial, sigma.entries[j].binomial, *entry.pivot),
                  entry.binomial);
        EXPECT_TRUE(cramer_identities_hold(sigma.entries[i].binomial, sigma.entries[j].binomial,
                                           *entry.pivot));
      }
    }
  }
}

TEST(SigmaTest, TelescopicColons) {
  for (auto [d, b] : {std::pair{7u, 3u}, {14u, 3u}, {5u, 2u}}) {
    for (const ColonCheck& c : verify_telescopic_colons(sigma_set(d, b))) {
      EXPECT_TRUE(c.contains_pivot) << d << "," << b << " entry " << c.index;
      EXPECT_TRUE(c.excludes_others) << d << "," << b << " entry " << c.index;
    }
  }
}

TEST(ReparametrizationTest, Examples) {
  const auto r = reparametrize(std::vector<unsigned>{4, 6}, std::vector<unsigned>{2, 3});
  EXPECT_EQ(r.reduced_a, (std::vector<unsigned>{2, 2}));
  EXPECT_EQ(r.reduced_b, (std::vector<unsigned>{1, 1}));
  EXPECT_EQ(r.c, (std::vector<unsigned>{2, 3}));
  EXPECT_EQ(r.apply(bin(1, 1, 0, 0, 1)), bin(2, 3, 0, 0, 1));

  EXPECT_TRUE(reparametrize(std::vector<unsigned>{14, 14}, std::vector<unsigned>{3, 11}).is_identity());
  const auto s = reparametrize(std::vector<unsigned>{9, 6}, std::vector<unsigned>{3, 4});
  EXPECT_EQ(s.reduced_a, (std::vector<unsigned>{3, 3}));
  EXPECT_EQ(s.reduced_b, (std::vector<unsigned>{1, 2}));
}

TEST(ReparametrizationPropertyTest, TransportsKernel) {
  std::mt19937 rng(29);
  std::uniform_int_distribution<unsigned> dd(2, 7), cc(2, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const unsigned d = dd(rng);
    const unsigned b = std::uniform_int_distribution<unsigned>(1, d - 1)(rng);
    if (std::gcd(d, b) != 1) continue;
    const unsigned cx = cc(rng), cy = cc(rng);
    const std::vector<unsigned> a{cx * d, cy * d}, bb{cx * b, cy * (d - b)};
    const auto r = reparametrize(a, bb);
    const ReesMap big = ReesMap::almost_complete_intersection(a, bb);
    for (const Binomial& g : sigma_set(d, b).binomials()) {
      EXPECT_TRUE(big.is_kernel_binomial(r.apply(g)));
    }
  }
}

}  // namespace
}  // namespace rees
