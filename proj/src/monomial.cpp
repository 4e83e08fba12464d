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

#include "rees/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>
#include <vector>

#include "rees/errors.hpp"

namespace rees {

namespace {

void check_ambient(std::size_t n_ground, std::size_t n_rees) {
  if (n_ground + n_rees > kMaxVariables) {
    throw InvalidArgument("ambient with " + std::to_string(n_ground) + "+" +
                          std::to_string(n_rees) +
                          " variables exceeds the supported maximum");
  }
}

Exponent checked(std::uint64_t e) {
  if (e > kMaxExponent) {
    throw ExponentOverflow("exponent " + std::to_string(e) +
                           " exceeds the supported maximum " +
                           std::to_string(kMaxExponent));
  }
  return static_cast<Exponent>(e);
}

void require_same_ambient(const Monomial& a, const Monomial& b) {
  if (!a.same_ambient(b)) {
    throw DimensionMismatch("monomials live in different ambients");
  }
}

}  // namespace

Monomial::Monomial(std::size_t n_ground, std::size_t n_rees) {
  check_ambient(n_ground, n_rees);
  n_ground_ = static_cast<std::uint8_t>(n_ground);
  n_rees_ = static_cast<std::uint8_t>(n_rees);
}

Monomial Monomial::make(std::span<const Exponent> ground,
                        std::span<const Exponent> rees) {
  MonomialBuilder b(ground.size(), rees.size());
  for (std::size_t i = 0; i < ground.size(); ++i) b.set_ground(i, ground[i]);
  for (std::size_t j = 0; j < rees.size(); ++j) b.set_rees(j, rees[j]);
  return b.build();
}

Monomial Monomial::ground_only(std::initializer_list<Exponent> ground) {
  return make(std::span<const Exponent>(ground.begin(), ground.size()), {});
}

Monomial Monomial::with_rees(std::initializer_list<Exponent> ground,
                             std::initializer_list<Exponent> rees) {
  return make(std::span<const Exponent>(ground.begin(), ground.size()),
              std::span<const Exponent>(rees.begin(), rees.size()));
}

Monomial Monomial::ground_variable(std::size_t n_ground, std::size_t n_rees,
                                   std::size_t i, Exponent e) {
  return MonomialBuilder(n_ground, n_rees).set_ground(i, e).build();
}

Monomial Monomial::rees_variable(std::size_t n_ground, std::size_t n_rees,
                                 std::size_t j, Exponent e) {
  return MonomialBuilder(n_ground, n_rees).set_rees(j, e).build();
}

std::uint64_t Monomial::ground_degree() const noexcept {
  std::uint64_t s = 0;
  for (auto e : ground_exps()) s += e;
  return s;
}

std::uint64_t Monomial::rees_degree() const noexcept {
  std::uint64_t s = 0;
  for (auto e : rees_exps()) s += e;
  return s;
}

bool Monomial::is_unit() const noexcept {
  return std::ranges::all_of(all_exps(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_ground() const noexcept {
  return std::ranges::all_of(rees_exps(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ambient(*this, other);
  const std::size_t k = std::size_t{n_ground_} + n_rees_;
  for (std::size_t i = 0; i < k; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::ground_part() const {
  Monomial out(n_ground_, 0);
  std::copy_n(exps_.begin(), n_ground_, out.exps_.begin());
  return out;
}

Monomial Monomial::lifted(std::size_t n_ground, std::size_t n_rees) const {
  if (n_ground < n_ground_ || n_rees < n_rees_) {
    throw DimensionMismatch("cannot lift a monomial into a smaller ambient");
  }
  MonomialBuilder b(n_ground, n_rees);
  for (std::size_t i = 0; i < n_ground_; ++i) b.set_ground(i, ground(i));
  for (std::size_t j = 0; j < n_rees_; ++j) b.set_rees(j, rees(j));
  return b.build();
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ (std::uint64_t{n_ground_} << 8) ^
                    n_rees_;
  const std::size_t k = std::size_t{n_ground_} + n_rees_;
  for (std::size_t i = 0; i < k; ++i) {
    h ^= exps_[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

MonomialBuilder::MonomialBuilder(std::size_t n_ground, std::size_t n_rees)
    : m_(n_ground, n_rees) {}

MonomialBuilder& MonomialBuilder::set_ground(std::size_t i, Exponent e) {
  if (i >= m_.n_ground_) throw DimensionMismatch("ground index out of range");
  m_.exps_[i] = checked(e);
  return *this;
}

MonomialBuilder& MonomialBuilder::set_rees(std::size_t j, Exponent e) {
  if (j >= m_.n_rees_) throw DimensionMismatch("Rees index out of range");
  m_.exps_[m_.n_ground_ + j] = checked(e);
  return *this;
}

MonomialBuilder& MonomialBuilder::add_ground(std::size_t i, std::uint64_t e) {
  if (i >= m_.n_ground_) throw DimensionMismatch("ground index out of range");
  m_.exps_[i] = checked(m_.exps_[i] + e);
  return *this;
}

MonomialBuilder& MonomialBuilder::add_rees(std::size_t j, std::uint64_t e) {
  if (j >= m_.n_rees_) throw DimensionMismatch("Rees index out of range");
  m_.exps_[m_.n_ground_ + j] = checked(m_.exps_[m_.n_ground_ + j] + e);
  return *this;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  MonomialBuilder out(a);
  for (std::size_t i = 0; i < a.n_ground(); ++i) out.add_ground(i, b.ground(i));
  for (std::size_t j = 0; j < a.n_rees(); ++j) out.add_rees(j, b.rees(j));
  return out.build();
}

std::optional<Monomial> mono_divide(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) return std::nullopt;
  MonomialBuilder out(a.n_ground(), a.n_rees());
  for (std::size_t i = 0; i < a.n_ground(); ++i) {
    out.set_ground(i, a.ground(i) - b.ground(i));
  }
  for (std::size_t j = 0; j < a.n_rees(); ++j) {
    out.set_rees(j, a.rees(j) - b.rees(j));
  }
  return out.build();
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  MonomialBuilder out(a.n_ground(), a.n_rees());
  for (std::size_t i = 0; i < a.n_ground(); ++i) {
    out.set_ground(i, std::min(a.ground(i), b.ground(i)));
  }
  for (std::size_t j = 0; j < a.n_rees(); ++j) {
    out.set_rees(j, std::min(a.rees(j), b.rees(j)));
  }
  return out.build();
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  MonomialBuilder out(a.n_ground(), a.n_rees());
  for (std::size_t i = 0; i < a.n_ground(); ++i) {
    out.set_ground(i, std::max(a.ground(i), b.ground(i)));
  }
  for (std::size_t j = 0; j < a.n_rees(); ++j) {
    out.set_rees(j, std::max(a.rees(j), b.rees(j)));
  }
  return out.build();
}

Monomial mono_pow(const Monomial& a, Exponent k) {
  MonomialBuilder out(a.n_ground(), a.n_rees());
  for (std::size_t i = 0; i < a.n_ground(); ++i) {
    out.set_ground(i, checked(std::uint64_t{a.ground(i)} * k));
  }
  for (std::size_t j = 0; j < a.n_rees(); ++j) {
    out.set_rees(j, checked(std::uint64_t{a.rees(j)} * k));
  }
  return out.build();
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  const std::size_t m = a.n_rees();
  // w is the fourth Rees variable and outranks t, u, v.
  if (m == 4) {
    if (auto c = a.rees(3) <=> b.rees(3); c != 0) return c;
    for (std::size_t j = 0; j < 3; ++j) {
      if (auto c = a.rees(j) <=> b.rees(j); c != 0) return c;
    }
  } else {
    for (std::size_t j = 0; j < m; ++j) {
      if (auto c = a.rees(j) <=> b.rees(j); c != 0) return c;
    }
  }
  for (std::size_t i = 0; i < a.n_ground(); ++i) {
    if (auto c = a.ground(i) <=> b.ground(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string ground_variable_name(std::size_t n_ground, std::size_t i) {
  static constexpr std::array<const char*, 3> kNames = {"x", "y", "z"};
  if (n_ground <= kNames.size()) return kNames[i];
  return "x" + std::to_string(i + 1);
}

std::string rees_variable_name(std::size_t n_rees, std::size_t j) {
  static constexpr std::array<const char*, 4> kNames = {"t", "u", "v", "w"};
  if (n_rees == 1) return "T";
  if (n_rees <= kNames.size()) return kNames[j];
  return "t" + std::to_string(j + 1);
}

namespace {

void append_factor(std::string& out, const std::string& name, Exponent e) {
  if (e == 0) return;
  if (!out.empty()) out += '*';
  out += name;
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
}

}  // namespace

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.n_ground(); ++i) {
    append_factor(out, ground_variable_name(m.n_ground(), i), m.ground(i));
  }
  for (std::size_t j = 0; j < m.n_rees(); ++j) {
    append_factor(out, rees_variable_name(m.n_rees(), j), m.rees(j));
  }
  return out.empty() ? std::string("1") : out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Monomial parse_monomial(std::string_view text, std::size_t n_ground,
                        std::size_t n_rees) {
  MonomialBuilder b(n_ground, n_rees);
  text = trim(text);
  if (text == "1") return b.build();
  if (text.empty()) throw ParseError("empty monomial");
  std::vector<Exponent> seen(n_ground + n_rees, 0);
  while (!text.empty()) {
    auto star = text.find('*');
    std::string_view factor = trim(text.substr(0, star));
    text = star == std::string_view::npos ? std::string_view{}
                                          : text.substr(star + 1);
    auto caret = factor.find('^');
    std::string_view name = factor.substr(0, caret);
    std::uint64_t e = 1;
    if (caret != std::string_view::npos) {
      std::string_view digits = factor.substr(caret + 1);
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), e);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || e == 0) {
        throw ParseError("bad exponent in factor '" + std::string(factor) + "'");
      }
    }
    bool found = false;
    for (std::size_t i = 0; i < n_ground && !found; ++i) {
      if (name == ground_variable_name(n_ground, i)) {
        b.add_ground(i, e);
        found = true;
      }
    }
    for (std::size_t j = 0; j < n_rees && !found; ++j) {
      if (name == rees_variable_name(n_rees, j)) {
        b.add_rees(j, e);
        found = true;
      }
    }
    if (!found) {
      throw ParseError("unknown variable '" + std::string(name) + "'");
    }
  }
  return b.build();
}

Binomial::Binomial(const Monomial& p, const Monomial& q) {
  auto c = lex_compare(p, q);
  if (c == 0) {
    throw InvalidArgument("binomial with equal terms: " + to_string(p));
  }
  if (c > 0) {
    lead_ = p;
    trail_ = q;
  } else {
    lead_ = q;
    trail_ = p;
    orientation_ = -1;
  }
}

Binomial Binomial::times(const Monomial& m) const {
  Binomial out(lead_ * m, trail_ * m);
  out.orientation_ = orientation_;
  return out;
}

Bidegree Binomial::bidegree() const {
  return {lead_.ground_degree(), lead_.rees_degree()};
}

std::string to_string(const Binomial& b) {
  return to_string(b.lead()) + " - " + to_string(b.trail());
}

Binomial parse_binomial(std::string_view text, std::size_t n_ground,
                        std::size_t n_rees) {
  auto dash = text.find(" - ");
  if (dash == std::string_view::npos) {
    throw ParseError("binomial must read 'lead - trail': " + std::string(text));
  }
  return Binomial(parse_monomial(text.substr(0, dash), n_ground, n_rees),
                  parse_monomial(text.substr(dash + 3), n_ground, n_rees));
}

bool BinomialLess::operator()(const Binomial& a, const Binomial& b) const {
  if (auto c = lex_compare(a.lead(), b.lead()); c != 0) return c < 0;
  return lex_compare(a.trail(), b.trail()) < 0;
}

}  // namespace rees
