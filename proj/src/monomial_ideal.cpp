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

#include "rees/monomial_ideal.hpp"

#include <algorithm>
#include <limits>

#include "rees/errors.hpp"

namespace rees {

namespace {

// Keeps the elements not strictly divisible by another one; duplicates
// collapse. Sorting by degree first lets a single pass suffice.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.ground_degree(), db = b.ground_degree();
    if (da != db) return da < db;
    return lex_compare(a, b) > 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    bool redundant = std::ranges::any_of(
        kept, [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), LexGreater{});
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t n_ground, std::vector<Monomial> generators)
    : n_ground_(n_ground) {
  for (const auto& g : generators) {
    if (g.n_ground() != n_ground || g.n_rees() != 0) {
      throw DimensionMismatch("monomial ideal generators must be ground monomials in " +
                              std::to_string(n_ground) + " variables");
    }
  }
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(std::size_t n_ground) {
  return MonomialIdeal(n_ground, {Monomial(n_ground, 0)});
}

bool MonomialIdeal::is_unit() const noexcept {
  return gens_.size() == 1 && gens_.front().is_unit();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.n_ground() != n_ground_ || !m.is_ground()) {
    throw DimensionMismatch("membership test needs a ground monomial");
  }
  const Monomial g = m.n_rees() == 0 ? m : m.ground_part();
  return std::ranges::any_of(gens_, [&](const Monomial& h) { return h.divides(g); });
}

MonomialIdeal ideal_colon_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.n_ground() != ideal.n_ground() || !m.is_ground()) {
    throw DimensionMismatch("colon needs a ground monomial of the same ring");
  }
  const Monomial g = m.n_rees() == 0 ? m : m.ground_part();
  std::vector<Monomial> out;
  out.reserve(ideal.generators().size());
  for (const auto& h : ideal.generators()) {
    out.push_back(*mono_divide(h, mono_gcd(h, g)));
  }
  return MonomialIdeal(ideal.n_ground(), std::move(out));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n_ground() != b.n_ground()) {
    throw DimensionMismatch("ideals live in different rings");
  }
  std::vector<Monomial> out;
  out.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) out.push_back(g * h);
  }
  return MonomialIdeal(a.n_ground(), std::move(out));
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, unsigned r) {
  MonomialIdeal out = MonomialIdeal::unit(ideal.n_ground());
  for (unsigned i = 0; i < r; ++i) out = ideal_product(out, ideal);
  return out;
}

std::uint64_t length_of_artinian_quotient(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.n_ground();
  if (ideal.is_unit()) return 0;
  // Box bounds from the pure powers.
  std::vector<Exponent> bound(n, std::numeric_limits<Exponent>::max());
  for (const auto& g : ideal.generators()) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (g.ground(i) > 0) {
        ++support;
        var = i;
      }
    }
    if (support == 1) bound[var] = std::min(bound[var], g.ground(var));
  }
  std::uint64_t box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (bound[i] == std::numeric_limits<Exponent>::max()) {
      throw InvalidArgument("quotient by " + to_string(ideal) +
                            " has infinite length: no pure power of " +
                            ground_variable_name(n, i));
    }
    box *= bound[i];
    if (box > 200'000'000ULL) {
      throw InvalidArgument("staircase box too large to enumerate");
    }
  }
  if (n == 0) return 1;
  // Walk the box; for the last variable count the run below the staircase.
  std::uint64_t count = 0;
  std::vector<Exponent> e(n, 0);
  const std::size_t last = n - 1;
  while (true) {
    // Smallest exponent of the last variable that lands in the ideal.
    Exponent cut = bound[last];
    for (const auto& g : ideal.generators()) {
      bool fits = true;
      for (std::size_t i = 0; i < last && fits; ++i) fits = g.ground(i) <= e[i];
      if (fits) cut = std::min(cut, g.ground(last));
    }
    count += cut;
    std::size_t i = 0;
    if (last == 0) break;
    while (i < last) {
      if (++e[i] < bound[i]) break;
      e[i] = 0;
      ++i;
    }
    if (i == last) break;
  }
  return count;
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.generators()[i]);
  }
  return out + ")";
}

}  // namespace rees
