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

// Reduction numbers of monomial almost complete intersections
// I = (x_1^a_1, ..., x_n^a_n, x^b) with respect to J = (x_1^a_1, ..., x_n^a_n),
// and the non-monomial reduction used in the uniform case when J is not one.

#ifndef REES_REDUCTION_HPP_
#define REES_REDUCTION_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "rees/monomial.hpp"
#include "rees/toric.hpp"

namespace rees {

struct AciSpec {
  std::vector<unsigned> a;
  std::vector<unsigned> b;

  std::size_t n() const noexcept { return a.size(); }
  // Throws InvalidArgument unless 0 <= b_i < a_i and two b_i are nonzero.
  void validate() const;
};

struct ReductionResult {
  // Least r <= cap with x^{(r+1)b} in J^{r+1}; empty when undecided at cap.
  std::optional<unsigned> r;
  unsigned cap = 0;
  // s with sum r+1 and s_i a_i <= (r+1) b_i.
  std::vector<unsigned> witness;
  // Number of positive entries of the witness.
  std::size_t support = 0;
  // sum b_i / a_i < 1, which rules out a monomial reduction.
  bool below_one = false;
};

// Floor-sum test: sum_i floor((r+1) b_i / a_i) >= r+1. A cap of 0 means
// 4 max(a_i).
ReductionResult is_monomial_reduction(const AciSpec& spec, unsigned r_cap = 0);

// Exhaustive search over exponent vectors s with at least two positive
// entries. Throws VerificationFailure when it disagrees with the floor-sum
// test.
ReductionResult red_search_general(const AciSpec& spec, unsigned r_cap = 0);

enum class ReductionKind { kMonomial, kBinomial };

struct UniformReduction {
  ReductionKind kind;
  unsigned red = 0;
  // Least p with p b >= a (monomial case only).
  unsigned p = 0;
};

// (x_1^a, ..., x_n^a, (x_1...x_n)^b): J when n b >= a, otherwise
// Q = (x_1^a - x_n^a, ..., x_{n-1}^a - x_n^a, (x_1...x_n)^b).
UniformReduction red_uniform(unsigned n, unsigned a, unsigned b);

struct QReductionReport {
  bool power_contained = false;  // I^n in Q I^(n-1)
  bool witness_excluded = false;  // x_n^{(n-1)a} not in Q I^(n-2)
  std::size_t generators_checked = 0;
  std::size_t largest_class = 0;

  bool pass() const noexcept { return power_contained && witness_excluded; }
};

// Requires n b < a; n must be 3 unless allow_large_n.
QReductionReport verify_q_reduction(unsigned n, unsigned a, unsigned b,
                                    std::size_t cap = kDefaultStateCap,
                                    bool allow_large_n = false);

}  // namespace rees

#endif  // REES_REDUCTION_HPP_
