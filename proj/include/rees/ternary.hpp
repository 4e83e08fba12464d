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

// Rees ideal of I = (x^a, y^a, z^a, (xyz)^b), a > 2b: the six syzygies L,
// three Sylvester forms H_1, H_2, H_3 and the implicit equation, with the
// colon facts behind the mapping-cone argument checked by congruence walks.

#ifndef REES_TERNARY_HPP_
#define REES_TERNARY_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rees/binary.hpp"
#include "rees/monomial.hpp"
#include "rees/monomial_ideal.hpp"
#include "rees/toric.hpp"

namespace rees {

// Ambient: x, y, z and t, u, v, w with w -> (xyz)^b.
Monomial ternary_monomial(Exponent x, Exponent y, Exponent z, Exponent t, Exponent u,
                          Exponent v, Exponent w);

enum class ImplicitRegime {
  kCubic,        // 3b >= a: E = w^3 - (xyz)^(3b-a) tuv
  kCubicShifted  // a > 3b: E' = (xyz)^(a-3b) w^3 - tuv
};

struct TernaryGenSet {
  unsigned a = 0;
  unsigned b = 0;
  std::array<Binomial, 3> f;
  std::array<Binomial, 3> g;
  std::array<Binomial, 3> h;
  Binomial implicit;
  ImplicitRegime regime;

  // f1, f2, f3, g1, g2, g3, H1, H2, H3, E (or E').
  std::vector<Binomial> all() const;
  std::vector<Binomial> syzygies() const;
  static std::vector<std::string> names(ImplicitRegime regime);
};

// Throws InvalidArgument unless a > 2b >= 2. Throws VerificationFailure when
// a Sylvester construction disagrees with its closed form or the three
// constructions of the implicit equation differ.
TernaryGenSet ternary_gens(unsigned a, unsigned b);

// Pivots used for E / E' from (g1, H3), (g2, H2), (g3, H1).
std::array<Pivot, 3> implicit_pivots(unsigned a, unsigned b);
// Pivots used for H1, H2, H3.
std::array<Pivot, 3> h_pivots(unsigned b);

enum class BinomialType { kType1 = 1, kType2, kType3, kType4, kNonConforming };
std::string to_string(BinomialType type);

// By the number of ground variables sharing the monomial with w. Binomials
// without w, with w on both sides or with a common factor are non-conforming.
BinomialType classify_type(const Binomial& bin);

// Coprime kernel binomials x^P w^delta - x^Q t^alpha with 1 <= delta <=
// delta_max, |alpha| = delta and every ground exponent below a.
std::vector<Binomial> enumerate_kernel_binomials(unsigned a, unsigned b,
                                                 unsigned delta_max = 3);

struct EnumerationCheck {
  std::vector<Binomial> found;
  // Found binomials outside (L).
  std::vector<Binomial> outside_syzygies;
  // outside_syzygies equals {H1, H2, H3, E or E'}.
  bool matches = false;
  // Binomials at delta = 4 outside the ideal of the ten generators (diagnostic).
  std::vector<Binomial> unreduced_at_four;
  bool diagnostic_ran = false;
};

EnumerationCheck check_enumeration(const TernaryGenSet& gens, bool diagnostic_four,
                                   std::size_t cap = kDefaultStateCap);

struct ColonClaim {
  std::string name;
  Binomial target;
  std::size_t prefix_size = 0;  // leading entries of all() forming the ideal
  MonomialIdeal claimed;
  bool certificates = false;
  bool contains_claimed = false;   // m * target in prefix for every generator m
  bool excludes_others = false;    // m * target not in prefix for m outside, deg m <= a
  std::size_t probes = 0;
  std::optional<Monomial> counterexample;

  bool pass() const noexcept { return certificates && contains_claimed && excludes_others; }
};

std::vector<ColonClaim> verify_colon_claims(const TernaryGenSet& gens,
                                            std::size_t cap = kDefaultStateCap);

struct RemovalProbe {
  std::string name;
  bool generation_fails = false;
  std::optional<Monomial> failing_image;
};

struct TernaryGenerationReport {
  SearchBounds bounds;
  bool pass = false;
  std::size_t fibers_checked = 0;
  std::optional<FiberFailure> failure;
  std::vector<RemovalProbe> removals;
  // Names of generators whose removal still passes.
  std::vector<std::string> redundant;
};

// Bounds default to T-degree 4 and ground degree 3a.
TernaryGenerationReport ternary_generation_check(const TernaryGenSet& gens,
                                                 std::optional<SearchBounds> bounds = {},
                                                 EngineOptions options = {});

}  // namespace rees

#endif  // REES_TERNARY_HPP_
