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

// Groebner-free toric machinery for kernels of Rees maps
//
//   t_j -> a_j * T,   x_i -> x_i,
//
// where a_1..a_m are ground monomials. The kernel is spanned by pure
// differences of monomials with a common image; a set of such binomials
// generates the kernel in a given image degree exactly when the one-step
// rewrites m*lead <-> m*trail connect the finite fiber of that image.

#ifndef REES_TORIC_HPP_
#define REES_TORIC_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rees/monomial.hpp"
#include "rees/parallel.hpp"

namespace rees {

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

class ReesMap {
 public:
  // `generators` are ground monomials a_1..a_m of one ring.
  explicit ReesMap(std::vector<Monomial> generators);

  // (x^d, y^d, x^b y^(d-b)) with t, u, v.
  static ReesMap binary(unsigned d, unsigned b);
  // (x^a, y^a, z^a, (xyz)^b) with t, u, v, w.
  static ReesMap ternary_uniform(unsigned a, unsigned b);
  // (x_1^a_1, ..., x_n^a_n, x^b).
  static ReesMap almost_complete_intersection(std::span<const unsigned> a,
                                              std::span<const unsigned> b);

  std::size_t n_ground() const noexcept { return n_ground_; }
  std::size_t n_rees() const noexcept { return gens_.size(); }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }

  // Unit monomial of the source ring (n ground, m Rees variables).
  Monomial source_unit() const { return Monomial(n_ground_, gens_.size()); }

  // x^alpha t^beta -> x^(alpha + sum beta_j a_j) T^|beta|, in the ambient
  // (n ground, 1 Rees variable).
  Monomial image(const Monomial& source) const;

  bool is_kernel_binomial(const Binomial& b) const {
    return image(b.lead()) == image(b.trail());
  }

 private:
  std::size_t n_ground_;
  std::vector<Monomial> gens_;
};

struct Fiber {
  Monomial image;
  // Sorted in increasing lex order.
  std::vector<Monomial> members;
};

Fiber fiber_enumerate(const ReesMap& map, const Monomial& image);

// Components of the fiber under the moves, each sorted increasingly, the list
// ordered by smallest member.
std::vector<std::vector<Monomial>> connected_under_moves(
    const Fiber& fiber, std::span<const Binomial> moves);

// Whether lead and trail of `b` are congruent under `generators`. Throws
// NotAKernelElement when their images differ and SearchCapExceeded when the
// explored class outgrows `cap`.
bool binomial_in_binomial_ideal(const ReesMap& map, const Binomial& b,
                                std::span<const Binomial> generators,
                                std::size_t cap = kDefaultStateCap);

struct MixedSearchStats {
  std::size_t class_size = 0;
};

// Membership of a monomial in (pure differences) + (monomials): the
// congruence class of `m` under `differences` meets the monomial ideal.
bool monomial_in_mixed_ideal(const Monomial& m,
                             std::span<const Binomial> differences,
                             std::span<const Monomial> monomials,
                             std::size_t cap = kDefaultStateCap,
                             MixedSearchStats* stats = nullptr);

struct SearchBounds {
  unsigned t_degree = 1;
  unsigned ground_degree = 1;
};

struct EngineOptions {
  unsigned workers = default_worker_count();
};

struct FiberFailure {
  Monomial image;
  // (smallest ground degree among members, T-degree).
  Bidegree bidegree;
  std::size_t components = 0;
  std::vector<Monomial> members;
};

struct GenerationReport {
  bool pass = true;
  std::optional<FiberFailure> first_failure;
  std::size_t fibers_checked = 0;
};

// Checks every image of a source monomial with T-degree <= t_degree and
// ground degree <= ground_degree. Fibers are visited by (T-degree, image
// degree, lex image); the report names the first disconnected one.
GenerationReport generates_up_to(const ReesMap& map,
                                 std::span<const Binomial> moves,
                                 SearchBounds bounds, EngineOptions options = {});

struct MinimalGenerators {
  std::vector<Binomial> moves;
  std::map<Bidegree, std::size_t> count_per_bidegree;
};

// Independent minimal generating set up to the bounds: fibers in increasing
// degree, spanning-tree binomials added whenever a fiber is disconnected.
// `shuffle_seed` permutes the processing order inside each degree.
MinimalGenerators bruteforce_min_gens(const ReesMap& map, SearchBounds bounds,
                                      std::optional<std::uint64_t> shuffle_seed = {},
                                      EngineOptions options = {});

}  // namespace rees

#endif  // REES_TORIC_HPP_
