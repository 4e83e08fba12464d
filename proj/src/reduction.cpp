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

#include "rees/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rees/errors.hpp"
#include "rees/monomial_ideal.hpp"

namespace rees {

namespace {

unsigned default_cap(const AciSpec& spec, unsigned r_cap) {
  if (r_cap != 0) return r_cap;
  return 4 * *std::max_element(spec.a.begin(), spec.a.end());
}

bool below_one(const AciSpec& spec) {
  // sum b_i / a_i < 1 with exact integer arithmetic over the common product.
  unsigned long long lcm = 1;
  for (unsigned ai : spec.a) lcm = std::lcm(lcm, static_cast<unsigned long long>(ai));
  unsigned long long total = 0;
  for (std::size_t i = 0; i < spec.n(); ++i) total += spec.b[i] * (lcm / spec.a[i]);
  return total < lcm;
}

unsigned floor_share(const AciSpec& spec, std::size_t i, unsigned r) {
  return static_cast<unsigned>((static_cast<unsigned long long>(r + 1) * spec.b[i]) /
                               spec.a[i]);
}

// Enumerates s with sum `total` and s_i <= limit_i; stops when fn returns true.
template <class Fn>
bool search_vectors(const std::vector<unsigned>& limit, unsigned total, Fn&& fn) {
  std::vector<unsigned> s(limit.size(), 0);
  auto rec = [&](auto& self, std::size_t pos, unsigned left) -> bool {
    if (pos + 1 == limit.size()) {
      if (left > limit[pos]) return false;
      s[pos] = left;
      return fn(s);
    }
    for (unsigned e = 0; e <= std::min(left, limit[pos]); ++e) {
      s[pos] = e;
      if (self(self, pos + 1, left - e)) return true;
    }
    return false;
  };
  return rec(rec, 0, total);
}

}  // namespace

void AciSpec::validate() const {
  if (a.size() != b.size() || a.size() < 2) {
    throw InvalidArgument("need two exponent vectors of equal length >= 2");
  }
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1 || b[i] >= a[i]) {
      throw InvalidArgument("need 0 <= b_i < a_i at index " + std::to_string(i));
    }
    if (b[i] != 0) ++nonzero;
  }
  if (nonzero < 2) throw InvalidArgument("need at least two nonzero b_i");
}

ReductionResult is_monomial_reduction(const AciSpec& spec, unsigned r_cap) {
  spec.validate();
  ReductionResult out;
  out.cap = default_cap(spec, r_cap);
  out.below_one = below_one(spec);
  for (unsigned r = 1; r <= out.cap; ++r) {
    unsigned sum = 0;
    for (std::size_t i = 0; i < spec.n(); ++i) sum += floor_share(spec, i, r);
    if (sum < r + 1) continue;
    out.r = r;
    unsigned left = r + 1;
    for (std::size_t i = 0; i < spec.n(); ++i) {
      unsigned take = std::min(left, floor_share(spec, i, r));
      out.witness.push_back(take);
      left -= take;
    }
    out.support = std::count_if(out.witness.begin(), out.witness.end(),
                                [](unsigned s) { return s > 0; });
    return out;
  }
  return out;
}

ReductionResult red_search_general(const AciSpec& spec, unsigned r_cap) {
  spec.validate();
  ReductionResult out;
  out.cap = default_cap(spec, r_cap);
  out.below_one = below_one(spec);
  for (unsigned r = 1; r <= out.cap && !out.r; ++r) {
    search_vectors(std::vector<unsigned>(spec.n(), r + 1), r + 1,
                   [&](const std::vector<unsigned>& s) {
                     std::size_t support = 0;
                     for (std::size_t i = 0; i < spec.n(); ++i) {
                       if (static_cast<unsigned long long>(s[i]) * spec.a[i] >
                           static_cast<unsigned long long>(r + 1) * spec.b[i]) {
                         return false;
                       }
                       if (s[i] > 0) ++support;
                     }
                     if (support < 2) return false;
                     out.r = r;
                     out.witness = s;
                     out.support = support;
                     return true;
                   });
  }
  ReductionResult check = is_monomial_reduction(spec, out.cap);
  if (check.r != out.r) {
    throw VerificationFailure("exhaustive reduction search disagrees with the floor-sum test");
  }
  return out;
}

UniformReduction red_uniform(unsigned n, unsigned a, unsigned b) {
  if (n < 2 || b < 1 || b >= a) {
    throw InvalidArgument("need n >= 2 and 0 < b < a");
  }
  if (static_cast<unsigned long long>(n) * b >= a) {
    unsigned p = (a + b - 1) / b;
    return {ReductionKind::kMonomial, p - 1, p};
  }
  return {ReductionKind::kBinomial, n - 1, 0};
}

QReductionReport verify_q_reduction(unsigned n, unsigned a, unsigned b, std::size_t cap,
                                    bool allow_large_n) {
  if (n < 2 || b < 1 || b >= a) throw InvalidArgument("need n >= 2 and 0 < b < a");
  if (static_cast<unsigned long long>(n) * b >= a) {
    throw InvalidArgument("n b >= a: J is already a reduction");
  }
  if (n != 3 && !allow_large_n) {
    throw InvalidArgument("Q-reduction checks beyond n = 3 need the large-n flag");
  }
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(Monomial::ground_variable(n, 0, i, a));
  std::vector<Exponent> mixed(n, b);
  const Monomial xb = Monomial::make(mixed, std::span<const Exponent>{});
  gens.push_back(xb);
  const MonomialIdeal ideal(n, gens);

  // Generators of Q K as differences and monomials.
  auto q_times = [&](const MonomialIdeal& k, std::vector<Binomial>& diffs,
                     std::vector<Monomial>& monos) {
    const Monomial last = Monomial::ground_variable(n, 0, n - 1, a);
    for (const auto& g : k.generators()) {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        diffs.emplace_back(Monomial::ground_variable(n, 0, i, a) * g, last * g);
      }
      monos.push_back(xb * g);
    }
  };

  QReductionReport report;
  {
    std::vector<Binomial> diffs;
    std::vector<Monomial> monos;
    q_times(ideal_power(ideal, n - 1), diffs, monos);
    report.power_contained = true;
    for (const auto& m : ideal_power(ideal, n).generators()) {
      MixedSearchStats stats;
      ++report.generators_checked;
      bool in = monomial_in_mixed_ideal(m, diffs, monos, cap, &stats);
      report.largest_class = std::max(report.largest_class, stats.class_size);
      if (!in) {
        report.power_contained = false;
        break;
      }
    }
  }
  {
    std::vector<Binomial> diffs;
    std::vector<Monomial> monos;
    q_times(ideal_power(ideal, n - 2), diffs, monos);
    MixedSearchStats stats;
    const Monomial witness = Monomial::ground_variable(n, 0, n - 1, (n - 1) * a);
    report.witness_excluded = !monomial_in_mixed_ideal(witness, diffs, monos, cap, &stats);
    report.largest_class = std::max(report.largest_class, stats.class_size);
  }
  return report;
}

}  // namespace rees
