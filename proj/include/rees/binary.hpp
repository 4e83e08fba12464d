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

// Generators of the Rees ideal of I = (x^d, y^d, x^b y^(d-b)) built by
// iterated Sylvester forms along the Euclidean algorithm of (d, b), and the
// generic 2x2 content determinant.

#ifndef REES_BINARY_HPP_
#define REES_BINARY_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rees/monomial.hpp"
#include "rees/polynomial.hpp"
#include "rees/toric.hpp"

namespace rees {

// d_{-1} = d, d_0 = b, d_{k-2} = c_k d_{k-1} + d_k, ending at d_{s+1} = 1 and
// d_{s+2} = 0; e_{-1} = 0, e_0 = 1, e_k = c_k e_{k-1} + e_{k-2}.
class EuclidData {
 public:
  EuclidData(unsigned d, unsigned b);

  unsigned d() const noexcept { return d_; }
  unsigned b() const noexcept { return b_; }
  // Number of division steps, s + 2.
  unsigned steps() const noexcept { return static_cast<unsigned>(quotients_.size()); }
  // k in [-1, s + 2].
  unsigned remainder(int k) const;
  // k in [1, s + 2].
  unsigned quotient(int k) const;
  // k in [-1, s + 2].
  std::uint64_t continuant(int k) const;

  const std::vector<unsigned>& quotients() const noexcept { return quotients_; }
  // d_1 .. d_{s+1} (the trailing zero omitted).
  std::vector<unsigned> remainders() const;
  // e_{-1} .. e_{s+2}.
  const std::vector<std::uint64_t>& continuants() const noexcept { return continuants_; }

 private:
  unsigned d_;
  unsigned b_;
  std::vector<unsigned> rem_;  // d_{-1} .. d_{s+2}
  std::vector<unsigned> quotients_;
  std::vector<std::uint64_t> continuants_;
};

// Throws InvalidArgument unless d > b >= 1 and gcd(d, b) = 1.
EuclidData euclid_sequence(unsigned d, unsigned b);

struct ExponentCheck {
  // p_{k,i} for odd k, q_{k,i} for even k.
  std::uint64_t value = 0;
  // i e_{k-1} + e_{k-2}, the v-degree of the generator.
  std::uint64_t bound = 0;
};

// Throws VerificationFailure when d does not divide the numerator or the
// value exceeds the bound.
ExponentCheck pk_qk(const EuclidData& e, unsigned k, unsigned i);

// F_{k,i} (odd k) or G_{k,i} (even k); (0, 0) gives G_{0,0} = y^b v - x^b u.
Binomial make_generator(const EuclidData& e, unsigned k, unsigned i);

using Pivot = std::pair<Monomial, Monomial>;

struct SignedMonomial {
  int sign = 1;
  Monomial monomial;
};

// Rows (f, g) of a content matrix: f = c11 p + c12 q, g = c21 p + c22 q.
struct ContentMatrix {
  std::array<SignedMonomial, 4> entries;  // c11, c12, c21, c22
  Pivot pivot;
};

// Throws InvalidArgument when the pivot is not a coprime pair of ground
// monomials or a row admits no assignment.
ContentMatrix content_matrix(const Binomial& f, const Binomial& g, const Pivot& pivot);

// c11 c22 - c12 c21 as a polynomial.
Polynomial content_determinant(const ContentMatrix& cm);

// The determinant as a canonically oriented binomial. Throws InvalidArgument
// when it vanishes.
Binomial sylvester_det(const Binomial& f, const Binomial& g, const Pivot& pivot);

// D p = c22 f - c12 g and D q = -c21 f + c11 g.
bool cramer_identities_hold(const Binomial& f, const Binomial& g, const Pivot& pivot);

enum class SigmaOrigin { kSyzygy, kSylvester, kImplicit };
std::string to_string(SigmaOrigin origin);

struct SigmaEntry {
  Binomial binomial;
  SigmaOrigin origin;
  unsigned k = 0;
  unsigned i = 0;
  // Indices into the set of the two determinant rows, and the pivot used.
  std::optional<std::pair<std::size_t, std::size_t>> predecessors;
  std::optional<Pivot> pivot;
};

struct SigmaSet {
  EuclidData euclid;
  std::vector<SigmaEntry> entries;

  std::vector<Binomial> binomials() const;
};

// G_{0,0}, F_{1,1}, then the Sylvester chain; the last entry is the implicit
// equation. Each entry is cross-checked against the closed form.
SigmaSet sigma_set(unsigned d, unsigned b);

// T(0) = (G_{0,0}); T(k) adds family k.
std::vector<Binomial> telescopic_subideal(const SigmaSet& sigma, unsigned k);

struct ColonCheck {
  std::size_t index = 0;  // entry of the set
  unsigned pivot_exponent = 0;
  bool contains_pivot = false;     // x^e X, y^e X lie in the prefix ideal
  bool excludes_others = false;    // m X does not, for the probed m
  std::size_t probes = 0;
};

// For every Sylvester entry X with pivot (x^e, y^e): (entries before X) : X
// equals (x^e, y^e) on monomials. The inclusion of the pivot ideal is checked
// by congruence membership; the converse on x^i y^j r with i, j < e and r a
// Rees variable or 1.
std::vector<ColonCheck> verify_telescopic_colons(const SigmaSet& sigma,
                                                 std::size_t cap = kDefaultStateCap);

// Per-variable gcd normalization of (x_1^a_1, ..., x_n^a_n, x^b).
struct Reparametrization {
  std::vector<unsigned> a, b;
  std::vector<unsigned> reduced_a, reduced_b;
  // x_i -> x_i^c_i.
  std::vector<unsigned> c;

  bool is_identity() const;
  Monomial apply(const Monomial& m) const;
  Binomial apply(const Binomial& b) const;
};

Reparametrization reparametrize(std::span<const unsigned> a, std::span<const unsigned> b);

}  // namespace rees

#endif  // REES_BINARY_HPP_
