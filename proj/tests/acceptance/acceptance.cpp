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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rees/binary.hpp"
#include "rees/lengths.hpp"
#include "rees/reduction.hpp"
#include "rees/rees_lab.h"
#include "rees/ternary.hpp"
#include "rees/toric.hpp"

using namespace rees;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failures of a criterion.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << " (" << checks_ << " checks";
    if (failed_) {
      os << ", " << failed_ << " failed:";
      for (const auto& f : failures_) os << " [" << f << "]";
    }
    os << ")";
    return {failed_ == 0, os.str()};
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

std::string pair_tag(unsigned d, unsigned b) {
  return "(" + std::to_string(d) + "," + std::to_string(b) + ")";
}

std::vector<std::pair<unsigned, unsigned>> coprime_pairs(unsigned lo, unsigned hi) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned d = lo; d <= hi; ++d) {
    for (unsigned b = 1; b < d; ++b) {
      if (std::gcd(d, b) == 1) out.emplace_back(d, b);
    }
  }
  return out;
}

using BinomialSet = std::set<Binomial, BinomialLess>;

Outcome golden_example() {
  Tally tally;
  const auto start = std::chrono::steady_clock::now();
  rl_report* report = nullptr;
  const rl_status st = rl_binary_gens(14, 3, &report);
  char* text = nullptr;
  if (report) rl_report_render(report, RL_FORMAT_JSON, &text);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  tally.expect(st == RL_OK && text != nullptr, "binary-gens 14 3 returned a report");
  if (!text) return tally.outcome("binary-gens 14 3");

  const nlohmann::json body = nlohmann::json::parse(text);
  BinomialSet got;
  for (const auto& g : body["results"]["generators"]) {
    got.insert(parse_binomial(g["binomial"].get<std::string>(), 2, 3));
  }
  rl_string_free(text);
  rl_report_free(report);

  const char* listed[] = {"y^3*v - x^3*u",      "y^11*t - x^11*v",   "y^8*t*u - x^8*v^2",
                          "y^5*t*u^2 - x^5*v^3", "y^2*t*u^3 - x^2*v^4", "x*t*u^4 - y*v^5",
                          "y*t^2*u^7 - x*v^9",  "t^3*u^11 - v^14"};
  BinomialSet want;
  for (const char* s : listed) want.insert(parse_binomial(s, 2, 3));
  tally.expect(got.size() == 8, "exactly 8 generators");
  tally.expect(got == want, "generator set equals the listed binomials");
  tally.expect(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  char buf[64];
  std::snprintf(buf, sizeof buf, "8 binomials in %.3f s", secs);
  return tally.outcome(buf);
}

Outcome generation_and_minimality() {
  Tally tally;
  std::size_t probes = 0;
  for (auto [d, b] : coprime_pairs(2, 12)) {
    const ReesMap map = ReesMap::binary(d, b);
    const SigmaSet sigma = sigma_set(d, b);
    const auto all = sigma.binomials();
    const SearchBounds bounds{d + 1, 3 * d};
    tally.expect(generates_up_to(map, all, bounds).pass, pair_tag(d, b) + " generation");
    for (std::size_t i = 0; i < all.size(); ++i) {
      std::vector<Binomial> rest = all;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      const GenerationReport r = generates_up_to(map, rest, bounds);
      ++probes;
      tally.expect(!r.pass && r.first_failure && r.first_failure->bidegree == all[i].bidegree(),
                   pair_tag(d, b) + " removal of " + to_string(all[i]));
    }
  }
  return tally.outcome("d <= 12, " + std::to_string(probes) + " removal probes");
}

Outcome count_formula() {
  Tally tally;
  for (auto [d, b] : coprime_pairs(2, 30)) {
    const SigmaSet sigma = sigma_set(d, b);
    const auto& q = sigma.euclid.quotients();
    const std::size_t formula = 1 + std::accumulate(q.begin(), q.end(), std::size_t{0});
    tally.expect(sigma.entries.size() == formula, pair_tag(d, b) + " count");
    if (d > 12) continue;
    const auto brute = bruteforce_min_gens(ReesMap::binary(d, b), {d + 1, 3 * d});
    tally.expect(brute.moves.size() == formula, pair_tag(d, b) + " brute force count");
  }
  return tally.outcome("d <= 30 formula, d <= 12 brute force");
}

Outcome integrality() {
  Tally tally;
  for (auto [d, b] : coprime_pairs(2, 30)) {
    const EuclidData e(d, b);
    for (unsigned k = 1; k <= e.steps(); ++k) {
      const int kk = static_cast<int>(k);
      for (unsigned i = 1; i <= e.quotient(kk); ++i) {
        try {
          const ExponentCheck c = pk_qk(e, k, i);
          const std::uint64_t bound = i * e.continuant(kk - 1) + e.continuant(kk - 2);
          tally.expect(c.value <= bound && c.bound == bound, pair_tag(d, b) + " bound");
        } catch (const std::exception& ex) {
          tally.expect(false, pair_tag(d, b) + " " + ex.what());
        }
      }
    }
    tally.expect(e.continuant(static_cast<int>(e.steps())) == d, pair_tag(d, b) + " e_{s+2}");
  }
  return tally.outcome("d <= 30");
}

Outcome length_formulas() {
  Tally tally;
  for (auto [d, b] : coprime_pairs(2, 20)) {
    if (b > d - b) continue;
    for (unsigned ell = 1; ell < d; ++ell) {
      const std::string tag = pair_tag(d, b) + " l=" + std::to_string(ell);
      tally.expect(st_formula(d, b, ell) == st_oracle(d, b, ell), tag);
      const MonomialIdeal colon = binary_colon_ideal(d, b, ell);
      bool pure = colon.generators().size() == 2;
      for (const Monomial& m : colon.generators()) pure = pure && (m.ground(0) == 0 || m.ground(1) == 0);
      tally.expect(pure, tag + " pure powers");
    }
    tally.expect(st_formula(d, b, 1) == ColonExponents{d - b, b}, pair_tag(d, b) + " row 1");
    if (2 * b < d) {
      const ColonExponents r2 = st_oracle(d, b, 2);
      tally.expect(std::uint64_t{r2.s} * r2.t == std::uint64_t{b} * (d - 2 * b),
                   pair_tag(d, b) + " lambda_2");
    }
  }
  return tally.outcome("d <= 20, every l");
}

Outcome huckaba_marley() {
  Tally tally;
  std::size_t equal = 0, total = 0;
  std::string strict;
  for (auto [d, b] : coprime_pairs(2, 20)) {
    if (b > d - b) continue;
    const LengthProfile p = hm_profile(d, b, false);
    std::uint64_t sum = 0;
    for (const LengthRow& r : p.rows) sum += r.lambda;
    const std::uint64_t e1 = std::uint64_t{d} * (d - 1) / 2;
    tally.expect(sum == p.hm_sum && sum <= e1, pair_tag(d, b) + " sum " + std::to_string(sum));
    ++total;
    if (sum == e1) {
      ++equal;
    } else {
      strict += " " + pair_tag(d, b);
    }
  }
  std::string summary = "equality in " + std::to_string(equal) + "/" + std::to_string(total);
  if (!strict.empty()) summary += "; strict at" + strict;
  return tally.outcome(summary);
}

Outcome reduction_numbers() {
  Tally tally;
  for (auto [d, b] : coprime_pairs(2, 20)) {
    tally.expect(is_monomial_reduction({{d, d}, {b, d - b}}).r == d - 1, pair_tag(d, b));
  }
  std::size_t q_checks = 0;
  for (unsigned n = 2; n <= 4; ++n) {
    for (unsigned a = 2; a <= 12; ++a) {
      for (unsigned b = 1; b < a; ++b) {
        const std::string tag =
            "n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
        const UniformReduction u = red_uniform(n, a, b);
        if (n * b >= a) {
          const AciSpec spec{std::vector<unsigned>(n, a), std::vector<unsigned>(n, b)};
          const ReductionResult search = red_search_general(spec);
          tally.expect(u.kind == ReductionKind::kMonomial && search.r == u.red, tag);
          continue;
        }
        tally.expect(u.kind == ReductionKind::kBinomial && u.red == n - 1, tag + " Q");
        if (n == 3 && a <= 6) {
          tally.expect(verify_q_reduction(n, a, b).pass(), tag + " Q facts");
          ++q_checks;
        }
      }
    }
  }
  return tally.outcome("binary d <= 20, uniform n <= 4 a <= 12, " + std::to_string(q_checks) +
                       " Q checks");
}

Monomial tm(Exponent x, Exponent y, Exponent z, Exponent t, Exponent u, Exponent v, Exponent w) {
  return ternary_monomial(x, y, z, t, u, v, w);
}

// The ten generators written out from their closed forms.
BinomialSet ternary_closed_forms(Exponent a, Exponent b) {
  const Exponent c = a - 2 * b;
  BinomialSet out{
      Binomial(tm(a, 0, 0, 0, 1, 0, 0), tm(0, a, 0, 1, 0, 0, 0)),
      Binomial(tm(a, 0, 0, 0, 0, 1, 0), tm(0, 0, a, 1, 0, 0, 0)),
      Binomial(tm(0, a, 0, 0, 0, 1, 0), tm(0, 0, a, 0, 1, 0, 0)),
      Binomial(tm(a - b, 0, 0, 0, 0, 0, 1), tm(0, b, b, 1, 0, 0, 0)),
      Binomial(tm(0, a - b, 0, 0, 0, 0, 1), tm(b, 0, b, 0, 1, 0, 0)),
      Binomial(tm(0, 0, a - b, 0, 0, 0, 1), tm(b, b, 0, 0, 0, 1, 0)),
      Binomial(tm(c, c, 0, 0, 0, 0, 2), tm(0, 0, 2 * b, 1, 1, 0, 0)),
      Binomial(tm(c, 0, c, 0, 0, 0, 2), tm(0, 2 * b, 0, 1, 0, 1, 0)),
      Binomial(tm(0, c, c, 0, 0, 0, 2), tm(2 * b, 0, 0, 0, 1, 1, 0)),
  };
  if (3 * b >= a) {
    const Exponent e = 3 * b - a;
    out.insert(Binomial(tm(0, 0, 0, 0, 0, 0, 3), tm(e, e, e, 1, 1, 1, 0)));
  } else {
    const Exponent e = a - 3 * b;
    out.insert(Binomial(tm(e, e, e, 0, 0, 0, 3), tm(0, 0, 0, 1, 1, 1, 0)));
  }
  return out;
}

Outcome ternary() {
  Tally tally;
  double slowest = 0;
  for (unsigned a = 3; a <= 7; ++a) {
    for (unsigned b = 1; 2 * b < a; ++b) {
      const std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      const auto start = std::chrono::steady_clock::now();
      const TernaryGenSet gens = ternary_gens(a, b);
      const auto all = gens.all();
      tally.expect(BinomialSet(all.begin(), all.end()) == ternary_closed_forms(a, b),
                   tag + " closed forms");
      for (const ColonClaim& c : verify_colon_claims(gens)) {
        tally.expect(c.certificates, tag + " " + c.name + " certificates");
        tally.expect(c.contains_claimed, tag + " " + c.name + " contains");
        tally.expect(c.excludes_others, tag + " " + c.name + " bounded exclusion");
      }
      const TernaryGenerationReport gen = ternary_generation_check(gens);
      tally.expect(gen.pass && gen.bounds.t_degree == 4, tag + " generation");
      tally.expect(check_enumeration(gens, false).matches, tag + " enumeration");
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      slowest = std::max(slowest, secs);
      tally.expect(secs < 300, tag + " runtime");
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "a <= 7, slowest instance %.2f s", slowest);
  return tally.outcome(buf);
}

std::multiset<std::uint64_t> t_degrees(const std::vector<Binomial>& moves) {
  std::multiset<std::uint64_t> out;
  for (const Binomial& m : moves) out.insert(m.bidegree().t);
  return out;
}

Outcome reparametrization() {
  Tally tally;
  std::mt19937 rng(20260415);
  std::uniform_int_distribution<unsigned> dd(2, 6), cc(1, 3);
  int done = 0;
  while (done < 20) {
    const unsigned d = dd(rng);
    const unsigned b = std::uniform_int_distribution<unsigned>(1, d - 1)(rng);
    const unsigned cx = cc(rng), cy = cc(rng);
    if (std::gcd(d, b) != 1 || (cx == 1 && cy == 1)) continue;
    ++done;
    const std::vector<unsigned> a{cx * d, cy * d}, bb{cx * b, cy * (d - b)};
    const std::string tag = "a=(" + std::to_string(a[0]) + "," + std::to_string(a[1]) +
                            ") b=(" + std::to_string(bb[0]) + "," + std::to_string(bb[1]) + ")";
    const Reparametrization rep = reparametrize(a, bb);
    tally.expect(rep.reduced_a == std::vector<unsigned>{d, d} &&
                     rep.reduced_b == std::vector<unsigned>{b, d - b},
                 tag + " reduced pair");
    const ReesMap big = ReesMap::almost_complete_intersection(a, bb);
    std::vector<Binomial> moved;
    for (const Binomial& g : sigma_set(d, b).binomials()) moved.push_back(rep.apply(g));
    bool kernel = true;
    for (const Binomial& g : moved) kernel = kernel && big.is_kernel_binomial(g);
    tally.expect(kernel, tag + " kernel");
    const SearchBounds bounds{d + 1, 3 * std::max(a[0], a[1])};
    tally.expect(generates_up_to(big, moved, bounds).pass, tag + " generation");
    const auto brute = bruteforce_min_gens(big, bounds);
    tally.expect(brute.moves.size() == moved.size() && t_degrees(brute.moves) == t_degrees(moved),
                 tag + " count and T-degrees");
    tally.expect(is_monomial_reduction({a, bb}).r == is_monomial_reduction({{d, d}, {b, d - b}}).r,
                 tag + " reduction number");
  }
  return tally.outcome("20 reducible pairs");
}

Outcome syzygy_indices_check() {
  Tally tally;
  std::size_t equidistant = 0, total = 0;
  std::string gaps;
  for (auto [d, b] : coprime_pairs(2, 20)) {
    if (b > d - b) continue;
    const SyzygyIndices s = syzygy_indices(hm_profile(d, b, false));
    const bool exists = s.ell0 >= 1 && s.ell0 < d && s.ell0_prime >= s.ell0 && s.ell0_prime < d;
    tally.expect(exists && s.ell0_prime + s.ell0 >= d, pair_tag(d, b));
    ++total;
    if (s.ell0_prime + s.ell0 == d) {
      ++equidistant;
    } else {
      gaps += " " + pair_tag(d, b);
    }
  }
  std::string summary =
      "l0' = d - l0 in " + std::to_string(equidistant) + "/" + std::to_string(total);
  if (!gaps.empty()) summary += "; larger at" + gaps;
  return tally.outcome(summary);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 golden example", golden_example},
      {"AC2 generation and minimality", generation_and_minimality},
      {"AC3 count formula", count_formula},
      {"AC4 integrality", integrality},
      {"AC5 length formulas", length_formulas},
      {"AC6 Huckaba-Marley", huckaba_marley},
      {"AC7 reduction numbers", reduction_numbers},
      {"AC8 ternary", ternary},
      {"AC9 reparametrization transport", reparametrization},
      {"AC10 linear-syzygy indices", syzygy_indices_check},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
