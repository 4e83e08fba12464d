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

#include <random>

#include <gtest/gtest.h>

#include "rees/binary.hpp"
#include "rees/errors.hpp"
#include "rees/toric.hpp"

namespace rees {
namespace {

Monomial bin(Exponent x, Exponent y, Exponent t, Exponent u, Exponent v) {
  return Monomial::with_rees({x, y}, {t, u, v});
}
Monomial img(Exponent x, Exponent y, Exponent tau) {
  return Monomial::with_rees({x, y}, {tau});
}

EngineOptions serial() { return EngineOptions{1}; }

TEST(ReesMapTest, ImageBySubstitution) {
  const ReesMap map = ReesMap::binary(2, 1);
  EXPECT_EQ(map.image(bin(0, 0, 1, 1, 0)), img(2, 2, 2));
  EXPECT_EQ(map.image(bin(0, 0, 0, 0, 2)), img(2, 2, 2));
  EXPECT_EQ(map.image(bin(3, 0, 0, 0, 0)), img(3, 0, 0));
}

TEST(ReesMapTest, GeneratorsOfFourteenThree) {
  const ReesMap map = ReesMap::binary(14, 3);
  ASSERT_EQ(map.n_rees(), 3u);
  EXPECT_EQ(map.generators()[2], Monomial::ground_only({3, 11}));
  EXPECT_THROW(ReesMap::binary(3, 3), InvalidArgument);
}

TEST(FiberTest, Enumerate) {
  const ReesMap map = ReesMap::binary(2, 1);
  const Fiber f = fiber_enumerate(map, img(2, 2, 2));
  ASSERT_EQ(f.members.size(), 2u);
  EXPECT_NE(std::find(f.members.begin(), f.members.end(), bin(0, 0, 1, 1, 0)), f.members.end());
  EXPECT_NE(std::find(f.members.begin(), f.members.end(), bin(0, 0, 0, 0, 2)), f.members.end());

  const Fiber single = fiber_enumerate(map, img(1, 0, 0));
  ASSERT_EQ(single.members.size(), 1u);
  EXPECT_EQ(single.members[0], bin(1, 0, 0, 0, 0));

  const ReesMap big = ReesMap::binary(14, 3);
  const Fiber implicit = fiber_enumerate(big, img(42, 154, 14));
  EXPECT_NE(std::find(implicit.members.begin(), implicit.members.end(), bin(0, 0, 3, 11, 0)),
            implicit.members.end());
  EXPECT_NE(std::find(implicit.members.begin(), implicit.members.end(), bin(0, 0, 0, 0, 14)),
            implicit.members.end());
}

TEST(FiberTest, MembersShareImageAndDegree) {
  const ReesMap map = ReesMap::binary(7, 3);
  for (Exponent x = 0; x <= 8; x += 2) {
    for (Exponent y = 0; y <= 9; y += 3) {
      const Monomial target = img(x + 9, y + 12, 3);
      for (const Monomial& m : fiber_enumerate(map, target).members) {
        EXPECT_EQ(map.image(m), target);
        EXPECT_EQ(m.rees_degree(), 3u);
      }
    }
  }
}

TEST(ConnectivityTest, Components) {
  const ReesMap map = ReesMap::binary(2, 1);
  const Fiber f = fiber_enumerate(map, img(2, 2, 2));
  const SigmaSet sigma = sigma_set(2, 1);
  const auto all = sigma.binomials();
  EXPECT_EQ(connected_under_moves(f, all).size(), 1u);

  const std::vector<Binomial> linear{Binomial(bin(1, 0, 0, 0, 1), bin(0, 1, 1, 0, 0)),
                                     Binomial(bin(0, 1, 0, 0, 1), bin(1, 0, 0, 1, 0))};
  EXPECT_EQ(connected_under_moves(f, linear).size(), 2u);
  EXPECT_TRUE(connected_under_moves(Fiber{img(0, 0, 0), {}}, all).empty());
}

TEST(ConnectivityTest, NonKernelMoveIsRejected) {
  const ReesMap map = ReesMap::binary(2, 1);
  const Fiber f = fiber_enumerate(map, img(2, 2, 2));
  // t*u -> u^2 applies to t*u but lands outside the fiber.
  const std::vector<Binomial> bad{Binomial(bin(0, 0, 1, 1, 0), bin(0, 0, 0, 2, 0))};
  EXPECT_THROW(connected_under_moves(f, bad), NotAKernelElement);
}

TEST(MembershipTest, BinomialIdeal) {
  const ReesMap two = ReesMap::binary(2, 1);
  const std::vector<Binomial> fg{Binomial(bin(1, 0, 0, 0, 1), bin(0, 1, 1, 0, 0)),
                                 Binomial(bin(0, 1, 0, 0, 1), bin(1, 0, 0, 1, 0))};
  EXPECT_FALSE(binomial_in_binomial_ideal(two, Binomial(bin(0, 0, 0, 0, 2), bin(0, 0, 1, 1, 0)), fg));
  for (const Binomial& g : fg) EXPECT_TRUE(binomial_in_binomial_ideal(two, g, fg));

  // For (7, 3) the Sylvester form x v^2 - y t u is not in (F, G) by degree,
  // but its multiples by the pivot x^3, y^3 are.
  const ReesMap seven = ReesMap::binary(7, 3);
  const EuclidData e = euclid_sequence(7, 3);
  const std::vector<Binomial> fg7{make_generator(e, 0, 0), make_generator(e, 1, 1)};
  const Binomial f2(bin(1, 0, 0, 0, 2), bin(0, 1, 1, 1, 0));
  EXPECT_TRUE(seven.is_kernel_binomial(f2));
  EXPECT_TRUE(binomial_in_binomial_ideal(seven, f2.times(bin(3, 0, 0, 0, 0)), fg7));
  EXPECT_TRUE(binomial_in_binomial_ideal(seven, f2.times(bin(0, 3, 0, 0, 0)), fg7));
  EXPECT_FALSE(binomial_in_binomial_ideal(seven, f2.times(bin(2, 0, 0, 0, 0)), fg7));
  EXPECT_FALSE(binomial_in_binomial_ideal(seven, f2, fg7));
}

TEST(MembershipTest, MixedIdeal) {
  const Monomial m = Monomial::ground_only({4, 2, 1});
  EXPECT_TRUE(monomial_in_mixed_ideal(m, {}, std::vector{Monomial::ground_only({1, 2, 0})}));
  EXPECT_FALSE(monomial_in_mixed_ideal(m, {}, std::vector{Monomial::ground_only({0, 3, 0})}));
  // x^2 - y^2 relates x^2 z to y^2 z, which lies in (y^2 z).
  const std::vector<Binomial> diff{Binomial(Monomial::ground_only({2, 0, 0}),
                                            Monomial::ground_only({0, 2, 0}))};
  EXPECT_TRUE(monomial_in_mixed_ideal(Monomial::ground_only({2, 0, 1}), diff,
                                      std::vector{Monomial::ground_only({0, 2, 1})}));
  EXPECT_THROW(monomial_in_mixed_ideal(Monomial::ground_only({40, 0, 0}), diff,
                                       std::vector{Monomial::ground_only({0, 0, 1})}, 5),
               SearchCapExceeded);
}

TEST(GenerationTest, SigmaFourteenThreePasses) {
  const ReesMap map = ReesMap::binary(14, 3);
  const auto moves = sigma_set(14, 3).binomials();
  EXPECT_TRUE(generates_up_to(map, moves, {15, 42}).pass);
}

TEST(GenerationTest, RemovingImplicitFailsAtItsFiber) {
  const ReesMap map = ReesMap::binary(14, 3);
  auto moves = sigma_set(14, 3).binomials();
  const Binomial implicit(bin(0, 0, 3, 11, 0), bin(0, 0, 0, 0, 14));
  auto it = std::find(moves.begin(), moves.end(), implicit);
  ASSERT_NE(it, moves.end());
  moves.erase(it);
  const GenerationReport r = generates_up_to(map, moves, {15, 42}, serial());
  ASSERT_FALSE(r.pass);
  ASSERT_TRUE(r.first_failure.has_value());
  EXPECT_EQ(r.first_failure->image, img(42, 154, 14));
  EXPECT_EQ(r.first_failure->bidegree, (Bidegree{0, 14}));
}

TEST(GenerationTest, ParallelAgreesWithSerial) {
  const ReesMap map = ReesMap::binary(11, 4);
  auto moves = sigma_set(11, 4).binomials();
  moves.pop_back();
  const auto a = generates_up_to(map, moves, {12, 33}, serial());
  const auto b = generates_up_to(map, moves, {12, 33}, EngineOptions{4});
  EXPECT_EQ(a.pass, b.pass);
  ASSERT_TRUE(a.first_failure && b.first_failure);
  EXPECT_EQ(a.first_failure->image, b.first_failure->image);
}

TEST(BruteforceTest, SmallCases) {
  const auto two = bruteforce_min_gens(ReesMap::binary(2, 1), {3, 6});
  ASSERT_EQ(two.moves.size(), 3u);
  EXPECT_EQ(two.count_per_bidegree.at(Bidegree{1, 1}), 2u);
  EXPECT_EQ(two.count_per_bidegree.at(Bidegree{0, 2}), 1u);

  const auto three = bruteforce_min_gens(ReesMap::binary(3, 1), {4, 9});
  EXPECT_EQ(three.moves.size(), 1u + 3u);
  EXPECT_EQ(bruteforce_min_gens(ReesMap::binary(14, 3), {15, 42}).moves.size(), 8u);
}

TEST(BruteforceTest, OrderIndependentCounts) {
  const ReesMap map = ReesMap::binary(8, 3);
  const auto base = bruteforce_min_gens(map, {9, 24});
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto shuffled = bruteforce_min_gens(map, {9, 24}, seed);
    EXPECT_EQ(shuffled.count_per_bidegree, base.count_per_bidegree) << "seed " << seed;
  }
}

TEST(EnginePropertyTest, OraclesAgreeOnRandomKernelBinomials) {
  const ReesMap map = ReesMap::binary(9, 2);
  const auto sigma = sigma_set(9, 2).binomials();
  ASSERT_TRUE(generates_up_to(map, sigma, {10, 27}).pass);
  std::mt19937 rng(23);
  std::uniform_int_distribution<Exponent> tau(1, 5), ex(0, 6);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 40; ++trial) {
    const unsigned t = tau(rng);
    std::uniform_int_distribution<Exponent> split(0, t);
    const Exponent a = split(rng);
    const Exponent b = std::uniform_int_distribution<Exponent>(0, t - a)(rng);
    const Monomial src = bin(ex(rng), ex(rng), a, b, t - a - b);
    const Fiber fib = fiber_enumerate(map, map.image(src));
    if (fib.members.size() < 2) continue;
    const Monomial other = fib.members[rng() % fib.members.size()];
    if (other == src) continue;
    const Binomial k(src, other);
    ASSERT_TRUE(map.is_kernel_binomial(k));
    EXPECT_TRUE(binomial_in_binomial_ideal(map, k, sigma)) << to_string(k);
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

}  // namespace
}  // namespace rees
