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

#ifndef REES_MONOMIAL_IDEAL_HPP_
#define REES_MONOMIAL_IDEAL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rees/monomial.hpp"

namespace rees {

// Ideal of the ground ring generated by monomials. The generator list is
// always the minimal antichain, sorted in decreasing lex order, so equality of
// ideals is equality of generator lists.
class MonomialIdeal {
 public:
  // The zero ideal of a polynomial ring in n_ground variables.
  explicit MonomialIdeal(std::size_t n_ground) : n_ground_(n_ground) {}
  MonomialIdeal(std::size_t n_ground, std::vector<Monomial> generators);

  static MonomialIdeal unit(std::size_t n_ground);

  std::size_t n_ground() const noexcept { return n_ground_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;

  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_ground_;
  std::vector<Monomial> gens_;
};

MonomialIdeal ideal_colon_monomial(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_power(const MonomialIdeal& ideal, unsigned r);
inline bool ideal_contains(const MonomialIdeal& ideal, const Monomial& m) {
  return ideal.contains(m);
}

// Number of standard monomials. Throws InvalidArgument when some variable has
// no pure power in the ideal (infinite length).
std::uint64_t length_of_artinian_quotient(const MonomialIdeal& ideal);

// "(x^2, y^2)"; the unit ideal is "(1)" and the zero ideal "(0)".
std::string to_string(const MonomialIdeal& ideal);

}  // namespace rees

#endif  // REES_MONOMIAL_IDEAL_HPP_
