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

#include "rees/lengths.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "rees/errors.hpp"

namespace rees {

namespace {

void check_pre(unsigned d, unsigned b, unsigned ell) {
  if (b < 1 || b >= d || std::gcd(d, b) != 1 || b > d - b) {
    throw InvalidArgument("need gcd(d, b) = 1 and 1 <= b <= d - b, got d=" +
                          std::to_string(d) + ", b=" + std::to_string(b));
  }
  if (ell < 1 || ell > d - 1) {
    throw InvalidArgument("need 1 <= l <= d - 1, got l=" + std::to_string(ell));
  }
}

MonomialIdeal binary_ideal(unsigned d, unsigned b) {
  return MonomialIdeal(2, {Monomial::ground_only({d, 0}), Monomial::ground_only({0, d}),
                           Monomial::ground_only({b, d - b})});
}

std::uint64_t choose2(std::uint64_t d) { return d * (d - 1) / 2; }

}  // namespace

ColonExponents st_formula(unsigned d, unsigned b, unsigned ell) {
  check_pre(d, b, ell);
  constexpr long long kNone = std::numeric_limits<long long>::max();
  long long m = kNone, m_prime = kNone, n = kNone, n_prime = kNone;
  const long long dd = d, bb = b;
  for (long long i = 0; i <= ell - 1; ++i) {
    for (long long j = 0; i + j <= ell - 1; ++j) {
      const long long low = i * dd - (ell - j) * bb;
      const long long high = (i + 1) * dd - (ell - j) * bb;
      if (low > 0) {
        m = std::min(m, low);
      } else if (high > 0) {
        m_prime = std::min(m_prime, high);
        n_prime = std::min(n_prime, -low);
      } else {
        n = std::min(n, -high);
      }
    }
  }
  const long long s = m != kNone ? m : m_prime;
  const long long t = n != kNone ? n : n_prime;
  if (s == kNone || t == kNone) {
    throw VerificationFailure("empty index sets at d=" + std::to_string(d) +
                              ", b=" + std::to_string(b) + ", l=" + std::to_string(ell));
  }
  return {static_cast<unsigned>(s), static_cast<unsigned>(t)};
}

MonomialIdeal binary_colon_ideal(unsigned d, unsigned b, unsigned ell) {
  check_pre(d, b, ell);
  const MonomialIdeal j(2, {Monomial::ground_only({d, 0}), Monomial::ground_only({0, d})});
  const MonomialIdeal jil = ideal_product(j, ideal_power(binary_ideal(d, b), ell - 1));
  return ideal_colon_monomial(jil, Monomial::ground_only({b * ell, (d - b) * ell}));
}

ColonExponents st_oracle(unsigned d, unsigned b, unsigned ell) {
  const MonomialIdeal colon = binary_colon_ideal(d, b, ell);
  const auto& g = colon.generators();
  // Sorted decreasingly: the x-power comes first.
  if (g.size() != 2 || g[0].ground(1) != 0 || g[1].ground(0) != 0) {
    throw VerificationFailure("colon at d=" + std::to_string(d) + ", b=" +
                              std::to_string(b) + ", l=" + std::to_string(ell) +
                              " is " + to_string(colon) + ", not two pure powers");
  }
  return {g[0].ground(0), g[1].ground(1)};
}

LengthProfile hm_profile(unsigned d, unsigned b, bool with_oracle) {
  LengthProfile p;
  p.d = d;
  p.b = b;
  p.e1 = choose2(d);
  p.s_monotone = true;
  for (unsigned ell = 1; ell <= d - 1; ++ell) {
    ColonExponents st = st_formula(d, b, ell);
    if (with_oracle) {
      ColonExponents o = st_oracle(d, b, ell);
      if (o != st) {
        throw VerificationFailure(
            "length formula gives (" + std::to_string(st.s) + ", " + std::to_string(st.t) +
            "), oracle (" + std::to_string(o.s) + ", " + std::to_string(o.t) +
            ") at d=" + std::to_string(d) + ", b=" + std::to_string(b) +
            ", l=" + std::to_string(ell));
      }
    }
    if (!p.rows.empty() && st.s > p.rows.back().s) p.s_monotone = false;
    p.rows.push_back({ell, st.s, st.t, std::uint64_t{st.s} * st.t});
    p.hm_sum += p.rows.back().lambda;
  }
  p.oracle_checked = with_oracle;
  p.hm_holds = p.hm_sum <= p.e1;
  p.hm_equal = p.hm_sum == p.e1;
  return p;
}

SyzygyIndices syzygy_indices(const LengthProfile& profile) {
  SyzygyIndices out;
  for (const auto& row : profile.rows) {
    if (out.ell0 == 0 && (row.s == 1 || row.t == 1)) out.ell0 = row.ell;
    if (out.ell0_prime == 0 && row.s == 1 && row.t == 1) out.ell0_prime = row.ell;
  }
  if (out.ell0 == 0 || out.ell0_prime == 0) {
    throw VerificationFailure("no linear-syzygy index within 1..d-1 for d=" +
                              std::to_string(profile.d) + ", b=" +
                              std::to_string(profile.b));
  }
  out.inequality_holds = out.ell0_prime + out.ell0 >= profile.d;
  out.equidistant = out.ell0_prime + out.ell0 == profile.d;
  return out;
}

std::vector<std::uint64_t> ternary_lengths(unsigned a, unsigned b, unsigned max_ell) {
  if (b < 1 || 2 * b >= a) throw InvalidArgument("need a > 2b >= 2");
  const MonomialIdeal j(3, {Monomial::ground_only({a, 0, 0}), Monomial::ground_only({0, a, 0}),
                            Monomial::ground_only({0, 0, a})});
  std::vector<Monomial> gens = j.generators();
  gens.push_back(Monomial::ground_only({b, b, b}));
  const MonomialIdeal ideal(3, gens);
  std::vector<std::uint64_t> out;
  MonomialIdeal prev = MonomialIdeal::unit(3);  // I^(l-1)
  for (unsigned ell = 1; ell <= max_ell; ++ell) {
    MonomialIdeal cur = ideal_product(prev, ideal);
    out.push_back(length_of_artinian_quotient(ideal_product(j, prev)) -
                  length_of_artinian_quotient(cur));
    prev = std::move(cur);
  }
  return out;
}

}  // namespace rees
