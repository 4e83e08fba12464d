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

#include "rees/ternary.hpp"

#include <algorithm>
#include <string>

#include "rees/errors.hpp"
#include "rees/polynomial.hpp"

namespace rees {

namespace {

using M = Monomial;

M xyz(Exponent x, Exponent y, Exponent z) { return ternary_monomial(x, y, z, 0, 0, 0, 0); }

// m1 - m2 as written, without reorientation.
Polynomial diff(const M& m1, const M& m2) {
  return Polynomial::monomial(m1) - Polynomial::monomial(m2);
}

Polynomial mono(const M& m) { return Polynomial::monomial(m); }

void require_ab(unsigned a, unsigned b) {
  if (b < 1 || a <= 2 * b) {
    throw InvalidArgument("need a > 2b >= 2, got a=" + std::to_string(a) +
                          ", b=" + std::to_string(b));
  }
}

void expect(const Binomial& built, const Binomial& closed, const std::string& name) {
  if (built != closed) {
    throw VerificationFailure(name + ": Sylvester form " + to_string(built) +
                              " differs from closed form " + to_string(closed));
  }
}

}  // namespace

Monomial ternary_monomial(Exponent x, Exponent y, Exponent z, Exponent t, Exponent u,
                          Exponent v, Exponent w) {
  return Monomial::with_rees({x, y, z}, {t, u, v, w});
}

std::vector<Binomial> TernaryGenSet::all() const {
  return {f[0], f[1], f[2], g[0], g[1], g[2], h[0], h[1], h[2], implicit};
}

std::vector<Binomial> TernaryGenSet::syzygies() const {
  return {f[0], f[1], f[2], g[0], g[1], g[2]};
}

std::vector<std::string> TernaryGenSet::names(ImplicitRegime regime) {
  return {"f1", "f2", "f3", "g1", "g2", "g3", "H1", "H2", "H3",
          regime == ImplicitRegime::kCubic ? "E" : "E'"};
}

std::array<Pivot, 3> h_pivots(unsigned b) {
  return {Pivot{xyz(b, 0, 0), xyz(0, b, 0)}, Pivot{xyz(b, 0, 0), xyz(0, 0, b)},
          Pivot{xyz(0, b, 0), xyz(0, 0, b)}};
}

std::array<Pivot, 3> implicit_pivots(unsigned a, unsigned b) {
  if (3 * b >= a) {
    const unsigned p = a - b, q = a - 2 * b;
    return {Pivot{xyz(p, 0, 0), xyz(0, q, q)}, Pivot{xyz(0, p, 0), xyz(q, 0, q)},
            Pivot{xyz(0, 0, p), xyz(q, q, 0)}};
  }
  return {Pivot{xyz(2 * b, 0, 0), xyz(0, b, b)}, Pivot{xyz(0, 2 * b, 0), xyz(b, 0, b)},
          Pivot{xyz(0, 0, 2 * b), xyz(b, b, 0)}};
}

TernaryGenSet ternary_gens(unsigned a, unsigned b) {
  require_ab(a, b);
  const unsigned c = a - b, e = a - 2 * b;
  auto T = [](Exponent t, Exponent u, Exponent v, Exponent w) {
    return ternary_monomial(0, 0, 0, t, u, v, w);
  };
  const Binomial f1(xyz(a, 0, 0) * T(0, 1, 0, 0), xyz(0, a, 0) * T(1, 0, 0, 0));
  const Binomial f2(xyz(a, 0, 0) * T(0, 0, 1, 0), xyz(0, 0, a) * T(1, 0, 0, 0));
  const Binomial f3(xyz(0, a, 0) * T(0, 0, 1, 0), xyz(0, 0, a) * T(0, 1, 0, 0));
  const Binomial g1(xyz(c, 0, 0) * T(0, 0, 0, 1), xyz(0, b, b) * T(1, 0, 0, 0));
  const Binomial g2(xyz(0, c, 0) * T(0, 0, 0, 1), xyz(b, 0, b) * T(0, 1, 0, 0));
  const Binomial g3(xyz(0, 0, c) * T(0, 0, 0, 1), xyz(b, b, 0) * T(0, 0, 1, 0));

  const auto hp = h_pivots(b);
  const Binomial h1 = sylvester_det(g1, g2, hp[0]);
  const Binomial h2 = sylvester_det(g1, g3, hp[1]);
  const Binomial h3 = sylvester_det(g2, g3, hp[2]);
  expect(h1, Binomial(xyz(e, e, 0) * T(0, 0, 0, 2), xyz(0, 0, 2 * b) * T(1, 1, 0, 0)), "H1");
  expect(h2, Binomial(xyz(e, 0, e) * T(0, 0, 0, 2), xyz(0, 2 * b, 0) * T(1, 0, 1, 0)), "H2");
  expect(h3, Binomial(xyz(0, e, e) * T(0, 0, 0, 2), xyz(2 * b, 0, 0) * T(0, 1, 1, 0)), "H3");

  const ImplicitRegime regime =
      3 * b >= a ? ImplicitRegime::kCubic : ImplicitRegime::kCubicShifted;
  const Binomial closed = regime == ImplicitRegime::kCubic
                              ? Binomial(T(0, 0, 0, 3), xyz(3 * b - a, 3 * b - a, 3 * b - a) *
                                                            T(1, 1, 1, 0))
                              : Binomial(xyz(a - 3 * b, a - 3 * b, a - 3 * b) * T(0, 0, 0, 3),
                                         T(1, 1, 1, 0));
  const auto ip = implicit_pivots(a, b);
  expect(sylvester_det(g1, h3, ip[0]), closed, "implicit equation from (g1, H3)");
  expect(sylvester_det(g2, h2, ip[1]), closed, "implicit equation from (g2, H2)");
  expect(sylvester_det(g3, h1, ip[2]), closed, "implicit equation from (g3, H1)");

  return TernaryGenSet{a, b, {f1, f2, f3}, {g1, g2, g3}, {h1, h2, h3}, closed, regime};
}

std::string to_string(BinomialType type) {
  switch (type) {
    case BinomialType::kType1: return "type 1";
    case BinomialType::kType2: return "type 2";
    case BinomialType::kType3: return "type 3";
    case BinomialType::kType4: return "type 4";
    case BinomialType::kNonConforming: return "non-conforming";
  }
  return "?";
}

BinomialType classify_type(const Binomial& bin) {
  const M& p = bin.lead();
  const M& q = bin.trail();
  if (p.n_ground() != 3 || p.n_rees() != 4) {
    throw DimensionMismatch("classification needs the ternary ambient");
  }
  if (!mono_gcd(p, q).is_unit()) return BinomialType::kNonConforming;
  const bool wp = p.rees(3) > 0, wq = q.rees(3) > 0;
  if (wp == wq) return BinomialType::kNonConforming;
  const M& side = wp ? p : q;
  int count = 0;
  for (std::size_t i = 0; i < 3; ++i) count += side.ground(i) > 0;
  return static_cast<BinomialType>(count + 1);
}

std::vector<Binomial> enumerate_kernel_binomials(unsigned a, unsigned b, unsigned delta_max) {
  require_ab(a, b);
  std::vector<Binomial> out;
  for (unsigned delta = 1; delta <= delta_max; ++delta) {
    const long long db = static_cast<long long>(delta) * b;
    for (unsigned a1 = 0; a1 <= delta; ++a1) {
      for (unsigned a2 = 0; a1 + a2 <= delta; ++a2) {
        const std::array<unsigned, 3> alpha{a1, a2, delta - a1 - a2};
        std::array<Exponent, 3> P{}, Q{};
        bool ok = true;
        for (std::size_t i = 0; i < 3 && ok; ++i) {
          const long long diffe = static_cast<long long>(alpha[i]) * a - db;
          P[i] = static_cast<Exponent>(std::max(0LL, diffe));
          Q[i] = static_cast<Exponent>(std::max(0LL, -diffe));
          ok = P[i] < a && Q[i] < a;
        }
        if (!ok) continue;
        out.emplace_back(ternary_monomial(P[0], P[1], P[2], 0, 0, 0, delta),
                         ternary_monomial(Q[0], Q[1], Q[2], alpha[0], alpha[1], alpha[2], 0));
      }
    }
  }
  std::sort(out.begin(), out.end(), BinomialLess{});
  return out;
}

EnumerationCheck check_enumeration(const TernaryGenSet& gens, bool diagnostic_four,
                                   std::size_t cap) {
  const ReesMap map = ReesMap::ternary_uniform(gens.a, gens.b);
  const auto syz = gens.syzygies();
  EnumerationCheck out;
  out.found = enumerate_kernel_binomials(gens.a, gens.b, 3);
  for (const auto& bin : out.found) {
    if (!binomial_in_binomial_ideal(map, bin, syz, cap)) out.outside_syzygies.push_back(bin);
  }
  std::vector<Binomial> expected{gens.h[0], gens.h[1], gens.h[2], gens.implicit};
  std::sort(expected.begin(), expected.end(), BinomialLess{});
  std::vector<Binomial> got = out.outside_syzygies;
  std::sort(got.begin(), got.end(), BinomialLess{});
  out.matches = got == expected;
  if (diagnostic_four) {
    out.diagnostic_ran = true;
    const auto ten = gens.all();
    for (const auto& bin : enumerate_kernel_binomials(gens.a, gens.b, 4)) {
      if (bin.lead().rees(3) + bin.trail().rees(3) != 4) continue;
      if (!binomial_in_binomial_ideal(map, bin, ten, cap)) out.unreduced_at_four.push_back(bin);
    }
  }
  return out;
}

std::vector<ColonClaim> verify_colon_claims(const TernaryGenSet& gens, std::size_t cap) {
  const unsigned a = gens.a, b = gens.b, c = a - b, e = a - 2 * b;
  const ReesMap map = ReesMap::ternary_uniform(a, b);
  const auto ten = gens.all();
  const auto hp = h_pivots(b);
  const auto ip = implicit_pivots(a, b);
  const Binomial& g1 = gens.g[0];
  const Binomial& g2 = gens.g[1];
  const Binomial& g3 = gens.g[2];
  const Binomial& h1 = gens.h[0];
  const Binomial& h2 = gens.h[1];
  const Binomial& h3 = gens.h[2];
  auto T = [](Exponent t, Exponent u, Exponent v, Exponent w) {
    return ternary_monomial(0, 0, 0, t, u, v, w);
  };
  // The generators with the signs they are usually written with.
  const Polynomial pf1 = diff(xyz(a, 0, 0) * T(0, 1, 0, 0), xyz(0, a, 0) * T(1, 0, 0, 0));
  const Polynomial pf3 = diff(xyz(0, a, 0) * T(0, 0, 1, 0), xyz(0, 0, a) * T(0, 1, 0, 0));
  const Polynomial pg1 = Polynomial::binomial(g1);
  const Polynomial pg3 = Polynomial::binomial(g3);
  const Polynomial ph1 = Polynomial::binomial(h1);
  const Polynomial ph2 = Polynomial::binomial(h2);
  const Polynomial ph3 = Polynomial::binomial(h3);

  std::vector<ColonClaim> claims;
  auto make = [&](std::string name, const Binomial& target, std::size_t prefix,
                  std::vector<M> claimed, bool certificates) {
    for (auto& m : claimed) m = m.ground_part();
    claims.push_back(ColonClaim{std::move(name), target, prefix,
                                MonomialIdeal(3, std::move(claimed)), certificates,
                                false, false, 0, std::nullopt});
  };

  make("(L):H1", h1, 6, {xyz(b, 0, 0), xyz(0, b, 0), xyz(0, 0, c)},
       poly_identity_check(mono(xyz(0, 0, c)) * ph1,
                           mono(xyz(e, e, 0) * T(0, 0, 0, 1)) * pg3 +
                               mono(xyz(0, c, 0) * T(0, 0, 1, 0)) * pg1 +
                               mono(xyz(0, 0, b) * T(1, 0, 0, 0)) * pf3) &&
           cramer_identities_hold(g1, g2, hp[0]));
  make("(L,H1):H2", h2, 7, {xyz(b, 0, 0), xyz(0, e, 0), xyz(0, 0, b)},
       poly_identity_check(mono(xyz(0, e, 0)) * ph2,
                           mono(xyz(0, 0, e)) * ph1 - mono(T(1, 0, 0, 0)) * pf3) &&
           cramer_identities_hold(g1, g3, hp[1]));
  make("(L,H1,H2):H3", h3, 8, {xyz(e, 0, 0), xyz(0, b, 0), xyz(0, 0, b)},
       poly_identity_check(mono(xyz(e, 0, 0)) * ph3,
                           mono(xyz(0, e, 0)) * ph2 - mono(T(0, 0, 1, 0)) * pf1) &&
           cramer_identities_hold(g2, g3, hp[2]));
  const bool implicit_certs = cramer_identities_hold(g1, h3, ip[0]) &&
                              cramer_identities_hold(g2, h2, ip[1]) &&
                              cramer_identities_hold(g3, h1, ip[2]);
  if (gens.regime == ImplicitRegime::kCubic) {
    make("(L,H1,H2,H3):E", gens.implicit, 9,
         {xyz(c, 0, 0), xyz(0, c, 0), xyz(0, 0, c), xyz(e, e, 0), xyz(e, 0, e), xyz(0, e, e)},
         implicit_certs);
  } else {
    make("(L,H1,H2,H3):E'", gens.implicit, 9,
         {xyz(2 * b, 0, 0), xyz(0, 2 * b, 0), xyz(0, 0, 2 * b), xyz(b, b, 0), xyz(b, 0, b),
          xyz(0, b, b)},
         implicit_certs);
  }

  for (auto& claim : claims) {
    std::span<const Binomial> prefix(ten.data(), claim.prefix_size);
    claim.contains_claimed = true;
    for (const auto& m : claim.claimed.generators()) {
      ++claim.probes;
      if (!binomial_in_binomial_ideal(map, claim.target.times(m.lifted(3, 4)), prefix, cap)) {
        claim.contains_claimed = false;
        claim.counterexample = m;
      }
    }
    claim.excludes_others = true;
    for (Exponent total = 0; total <= a && claim.excludes_others; ++total) {
      for (Exponent i = 0; i <= total && claim.excludes_others; ++i) {
        for (Exponent j = 0; i + j <= total; ++j) {
          const M m = Monomial::ground_only({i, j, total - i - j});
          if (claim.claimed.contains(m)) continue;
          ++claim.probes;
          if (binomial_in_binomial_ideal(map, claim.target.times(m.lifted(3, 4)), prefix,
                                         cap)) {
            claim.excludes_others = false;
            claim.counterexample = m;
            break;
          }
        }
      }
    }
  }
  return claims;
}

TernaryGenerationReport ternary_generation_check(const TernaryGenSet& gens,
                                                 std::optional<SearchBounds> bounds,
                                                 EngineOptions options) {
  const ReesMap map = ReesMap::ternary_uniform(gens.a, gens.b);
  TernaryGenerationReport out;
  out.bounds = bounds.value_or(SearchBounds{4, 3 * gens.a});
  const auto ten = gens.all();
  const auto names = TernaryGenSet::names(gens.regime);
  GenerationReport full = generates_up_to(map, ten, out.bounds, options);
  out.pass = full.pass;
  out.fibers_checked = full.fibers_checked;
  out.failure = full.first_failure;
  for (std::size_t k = 0; k < ten.size(); ++k) {
    std::vector<Binomial> rest = ten;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    GenerationReport r = generates_up_to(map, rest, out.bounds, options);
    RemovalProbe probe{names[k], !r.pass, {}};
    if (r.first_failure) probe.failing_image = r.first_failure->image;
    if (r.pass) out.redundant.push_back(names[k]);
    out.removals.push_back(std::move(probe));
  }
  return out;
}

}  // namespace rees
