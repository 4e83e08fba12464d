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

// Sparse integer polynomials; only used to check certificate identities.

#ifndef REES_POLYNOMIAL_HPP_
#define REES_POLYNOMIAL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rees/monomial.hpp"

namespace rees {

struct Term {
  std::int64_t coefficient = 0;
  Monomial monomial;
  friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
 public:
  Polynomial() = default;
  // Zero polynomial in the given ambient.
  Polynomial(std::size_t n_ground, std::size_t n_rees)
      : n_ground_(n_ground), n_rees_(n_rees) {}
  // Collects like terms; drops zero coefficients.
  Polynomial(std::size_t n_ground, std::size_t n_rees, std::vector<Term> terms);

  static Polynomial monomial(const Monomial& m, std::int64_t c = 1);
  static Polynomial binomial(const Binomial& b);

  // Terms sorted in decreasing lex order.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Monomial& m) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t n_ground_ = 0;
  std::size_t n_rees_ = 0;
  std::vector<Term> terms_;
};

// lhs - rhs normalizes to zero.
bool poly_identity_check(const Polynomial& lhs, const Polynomial& rhs);

std::string to_string(const Polynomial& p);

}  // namespace rees

#endif  // REES_POLYNOMIAL_HPP_
