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

// Lengths of I^l / J I^(l-1) for I = (x^d, y^d, x^b y^(d-b)), J = (x^d, y^d),
// and the Huckaba-Marley sum against e_1(I) = C(d, 2).

#ifndef REES_LENGTHS_HPP_
#define REES_LENGTHS_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rees/monomial_ideal.hpp"

namespace rees {

struct ColonExponents {
  unsigned s = 0;
  unsigned t = 0;
  friend bool operator==(const ColonExponents&, const ColonExponents&) = default;
};

// Minima over the triangle i + j <= l - 1 split by the sign of
// i d - (l - j) b and (i + 1) d - (l - j) b. Requires gcd(d, b) = 1,
// b <= d - b and 1 <= l <= d - 1.
ColonExponents st_formula(unsigned d, unsigned b, unsigned ell);

// J I^(l-1) : x^(b l) y^((d-b) l) by ideal arithmetic. Throws
// VerificationFailure when the colon is not generated by two pure powers.
ColonExponents st_oracle(unsigned d, unsigned b, unsigned ell);

// The colon ideal itself, for reporting.
MonomialIdeal binary_colon_ideal(unsigned d, unsigned b, unsigned ell);

struct LengthRow {
  unsigned ell = 0;
  unsigned s = 0;
  unsigned t = 0;
  std::uint64_t lambda = 0;
};

struct LengthProfile {
  unsigned d = 0;
  unsigned b = 0;
  std::vector<LengthRow> rows;
  std::uint64_t hm_sum = 0;
  std::uint64_t e1 = 0;
  bool hm_holds = false;
  bool hm_equal = false;
  // Rows agree with the ideal-arithmetic oracle (when it ran).
  bool oracle_checked = false;
  bool s_monotone = false;
};

// Throws VerificationFailure when the oracle disagrees with the formula.
LengthProfile hm_profile(unsigned d, unsigned b, bool with_oracle = true);

struct SyzygyIndices {
  unsigned ell0 = 0;        // least l with s_l = 1 or t_l = 1
  unsigned ell0_prime = 0;  // least l with s_l = t_l = 1
  bool inequality_holds = false;  // ell0' >= d - ell0
  bool equidistant = false;       // ell0' == d - ell0
};

// Throws VerificationFailure when either index does not exist.
SyzygyIndices syzygy_indices(const LengthProfile& profile);

// Exploratory: lambda(I^l / J I^(l-1)) for (x^a, y^a, z^a, (xyz)^b), l = 1..max_ell.
std::vector<std::uint64_t> ternary_lengths(unsigned a, unsigned b, unsigned max_ell);

}  // namespace rees

#endif  // REES_LENGTHS_HPP_
