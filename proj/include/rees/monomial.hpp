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

// Exponent-vector monomials over ground variables x_1..x_n and Rees
// variables t_1..t_m, and pure-difference binomials built from them.
//
// Variable names follow the ambient size: up to three ground variables are
// x, y, z (otherwise x1..xn); up to four Rees variables are t, u, v, w
// (otherwise t1..tm); a single Rees variable is the homogenizing T used by
// images of the Rees map. The term order is lexicographic with
// w > t > u > v > x > y > z.

#ifndef REES_MONOMIAL_HPP_
#define REES_MONOMIAL_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace rees {

using Exponent = std::uint32_t;

inline constexpr Exponent kMaxExponent = 1'000'000;
inline constexpr std::size_t kMaxVariables = 16;

class Monomial {
 public:
  // The unit monomial of the empty ambient.
  Monomial() = default;

  // The unit monomial with the given ambient.
  Monomial(std::size_t n_ground, std::size_t n_rees);

  static Monomial make(std::span<const Exponent> ground,
                       std::span<const Exponent> rees);
  static Monomial ground_only(std::initializer_list<Exponent> ground);
  static Monomial with_rees(std::initializer_list<Exponent> ground,
                            std::initializer_list<Exponent> rees);
  // x_i^e in the given ambient.
  static Monomial ground_variable(std::size_t n_ground, std::size_t n_rees,
                                  std::size_t i, Exponent e = 1);
  static Monomial rees_variable(std::size_t n_ground, std::size_t n_rees,
                                std::size_t j, Exponent e = 1);

  std::size_t n_ground() const noexcept { return n_ground_; }
  std::size_t n_rees() const noexcept { return n_rees_; }

  Exponent ground(std::size_t i) const { return exps_[i]; }
  Exponent rees(std::size_t j) const { return exps_[n_ground_ + j]; }
  std::span<const Exponent> ground_exps() const noexcept {
    return {exps_.data(), n_ground_};
  }
  std::span<const Exponent> rees_exps() const noexcept {
    return {exps_.data() + n_ground_, n_rees_};
  }
  std::span<const Exponent> all_exps() const noexcept {
    return {exps_.data(), std::size_t{n_ground_} + n_rees_};
  }

  std::uint64_t ground_degree() const noexcept;
  std::uint64_t rees_degree() const noexcept;
  bool is_unit() const noexcept;
  // No Rees variable occurs.
  bool is_ground() const noexcept;

  bool same_ambient(const Monomial& other) const noexcept {
    return n_ground_ == other.n_ground_ && n_rees_ == other.n_rees_;
  }

  // Component-wise <=.
  bool divides(const Monomial& other) const;

  // Returns a copy with the ground part only (Rees exponents dropped to an
  // ambient with zero Rees variables).
  Monomial ground_part() const;
  // Same exponents viewed in the ambient (n, m) obtained by appending zero
  // Rees exponents or moving to a larger ambient; the extra slots are zero.
  Monomial lifted(std::size_t n_ground, std::size_t n_rees) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.n_ground_ == b.n_ground_ && a.n_rees_ == b.n_rees_ &&
           a.exps_ == b.exps_;
  }

 private:
  friend class MonomialBuilder;
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint8_t n_ground_ = 0;
  std::uint8_t n_rees_ = 0;
};

// Mutable scratch space for assembling a Monomial.
class MonomialBuilder {
 public:
  MonomialBuilder(std::size_t n_ground, std::size_t n_rees);
  explicit MonomialBuilder(const Monomial& start) : m_(start) {}

  MonomialBuilder& set_ground(std::size_t i, Exponent e);
  MonomialBuilder& set_rees(std::size_t j, Exponent e);
  MonomialBuilder& add_ground(std::size_t i, std::uint64_t e);
  MonomialBuilder& add_rees(std::size_t j, std::uint64_t e);
  Monomial build() const { return m_; }

 private:
  Monomial m_;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
inline Monomial operator*(const Monomial& a, const Monomial& b) {
  return mono_mul(a, b);
}
// a / b when b divides a.
std::optional<Monomial> mono_divide(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_pow(const Monomial& a, Exponent k);

// Lexicographic comparison with w > t > u > v > x > y > z.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

struct LexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return lex_compare(a, b) < 0;
  }
};
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return lex_compare(a, b) > 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

std::string ground_variable_name(std::size_t n_ground, std::size_t i);
std::string rees_variable_name(std::size_t n_rees, std::size_t j);

// "x^2*y*t", unit rendered "1".
std::string to_string(const Monomial& m);
Monomial parse_monomial(std::string_view text, std::size_t n_ground,
                        std::size_t n_rees);

// Ground-degree / T-degree pair.
struct Bidegree {
  std::uint64_t ground = 0;
  std::uint64_t t = 0;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

// lead - trail with lead > trail in the lex order.
class Binomial {
 public:
  // Orients the pair; throws InvalidArgument if p == q.
  Binomial(const Monomial& p, const Monomial& q);

  const Monomial& lead() const noexcept { return lead_; }
  const Monomial& trail() const noexcept { return trail_; }

  // +1 when constructed as (lead, trail), -1 when the arguments were swapped.
  int orientation() const noexcept { return orientation_; }

  Binomial times(const Monomial& m) const;
  // (ground degree of the lead, T-degree of the lead).
  Bidegree bidegree() const;

  friend bool operator==(const Binomial& a, const Binomial& b) noexcept {
    return a.lead_ == b.lead_ && a.trail_ == b.trail_;
  }

 private:
  Monomial lead_;
  Monomial trail_;
  int orientation_ = 1;
};

std::string to_string(const Binomial& b);
Binomial parse_binomial(std::string_view text, std::size_t n_ground,
                        std::size_t n_rees);

struct BinomialLess {
  bool operator()(const Binomial& a, const Binomial& b) const;
};

}  // namespace rees

template <>
struct std::hash<rees::Monomial> {
  std::size_t operator()(const rees::Monomial& m) const noexcept {
    return m.hash();
  }
};

#endif  // REES_MONOMIAL_HPP_
