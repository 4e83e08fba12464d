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

#include "rees/polynomial.hpp"

#include <algorithm>
#include <map>

#include "rees/errors.hpp"

namespace rees {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ExponentOverflow("polynomial coefficient overflow");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ExponentOverflow("polynomial coefficient overflow");
  }
  return r;
}

}  // namespace

Polynomial::Polynomial(std::size_t n_ground, std::size_t n_rees,
                       std::vector<Term> terms)
    : n_ground_(n_ground), n_rees_(n_rees) {
  std::map<Monomial, std::int64_t, LexGreater> acc;
  for (auto& t : terms) {
    if (t.monomial.n_ground() != n_ground || t.monomial.n_rees() != n_rees) {
      throw DimensionMismatch("term outside the polynomial's ambient");
    }
    auto& c = acc[t.monomial];
    c = checked_add(c, t.coefficient);
  }
  for (auto& [m, c] : acc) {
    if (c != 0) terms_.push_back({c, m});
  }
}

Polynomial Polynomial::monomial(const Monomial& m, std::int64_t c) {
  return Polynomial(m.n_ground(), m.n_rees(), {{c, m}});
}

Polynomial Polynomial::binomial(const Binomial& b) {
  const auto& l = b.lead();
  return Polynomial(l.n_ground(), l.n_rees(), {{1, b.lead()}, {-1, b.trail()}});
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (n_ground_ != o.n_ground_ || n_rees_ != o.n_rees_) {
    throw DimensionMismatch("polynomials live in different ambients");
  }
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return Polynomial(n_ground_, n_rees_, std::move(all));
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coefficient = checked_mul(t.coefficient, -1);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (n_ground_ != o.n_ground_ || n_rees_ != o.n_rees_) {
    throw DimensionMismatch("polynomials live in different ambients");
  }
  std::vector<Term> all;
  all.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      all.push_back({checked_mul(a.coefficient, b.coefficient),
                     a.monomial * b.monomial});
    }
  }
  return Polynomial(n_ground_, n_rees_, std::move(all));
}

Polynomial Polynomial::operator*(const Monomial& m) const {
  return *this * Polynomial::monomial(m);
}

bool poly_identity_check(const Polynomial& lhs, const Polynomial& rhs) {
  return (lhs - rhs).is_zero();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::int64_t c = t.coefficient;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::int64_t mag = c < 0 ? -c : c;
    bool unit = t.monomial.is_unit();
    if (mag != 1 || unit) {
      out += std::to_string(mag);
      if (!unit) out += "*";
    }
    if (!unit) out += to_string(t.monomial);
    first = false;
  }
  return out;
}

}  // namespace rees
