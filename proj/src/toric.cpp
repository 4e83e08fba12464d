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

#include "rees/toric.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "rees/errors.hpp"

namespace rees {

namespace {

// Calls fn(parts) for every composition of `total` into `k` non-negative parts.
template <class Fn>
void for_each_composition(std::size_t k, unsigned total, Fn&& fn) {
  std::vector<Exponent> parts(k, 0);
  if (k == 0) {
    if (total == 0) fn(std::span<const Exponent>(parts));
    return;
  }
  auto rec = [&](auto& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == k) {
      parts[pos] = left;
      fn(std::span<const Exponent>(parts));
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      parts[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, total);
}

// Calls fn(exps) for every exponent vector of length k with sum <= max_total.
template <class Fn>
void for_each_bounded(std::size_t k, unsigned max_total, Fn&& fn) {
  for (unsigned total = 0; total <= max_total; ++total) {
    for_each_composition(k, total, fn);
  }
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_source(const ReesMap& map, const Monomial& m) {
  if (m.n_ground() != map.n_ground() || m.n_rees() != map.n_rees()) {
    throw DimensionMismatch("monomial " + to_string(m) +
                            " is not in the source ring of the Rees map");
  }
}

// Rewrites of u: one step along every move, both directions.
template <class Fn>
void for_each_neighbor(const Monomial& u, std::span<const Binomial> moves, Fn&& fn) {
  for (const auto& mv : moves) {
    if (auto q = mono_divide(u, mv.lead())) fn(*q * mv.trail());
    if (auto q = mono_divide(u, mv.trail())) fn(*q * mv.lead());
  }
}

std::size_t component_count(const Fiber& fiber, std::span<const Binomial> moves,
                            std::vector<std::vector<Monomial>>* components) {
  const auto& members = fiber.members;
  if (members.size() <= 1 && components == nullptr) return members.size();
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  index.reserve(members.size() * 2);
  for (std::size_t i = 0; i < members.size(); ++i) index.emplace(members[i], i);
  UnionFind uf(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const auto& mv : moves) {
      if (!mv.lead().same_ambient(members[i])) {
        throw DimensionMismatch("move " + to_string(mv) +
                                " is not in the fiber's ambient");
      }
      if (auto q = mono_divide(members[i], mv.lead())) {
        auto it = index.find(*q * mv.trail());
        if (it == index.end()) {
          throw NotAKernelElement("move " + to_string(mv) +
                                  " leaves the fiber of " + to_string(fiber.image));
        }
        uf.unite(i, it->second);
      }
    }
  }
  std::size_t count = 0;
  std::vector<std::size_t> root_slot(members.size(), members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::size_t r = uf.find(i);
    if (root_slot[r] == members.size()) root_slot[r] = count++;
    if (components) {
      if (components->size() < count) components->emplace_back();
      (*components)[root_slot[r]].push_back(members[i]);
    }
  }
  return count;
}

Bidegree fiber_bidegree(const Fiber& f) {
  std::uint64_t g = f.members.empty() ? f.image.ground_degree()
                                      : f.members.front().ground_degree();
  for (const auto& m : f.members) g = std::min(g, m.ground_degree());
  return {g, f.image.rees(0)};
}

// Images of source monomials with T-degree `tau` and ground degree <= bound,
// grouped by image degree; each group sorted increasingly.
std::vector<std::vector<Monomial>> images_at_level(const ReesMap& map, unsigned tau,
                                                   unsigned ground_bound) {
  const std::size_t n = map.n_ground();
  const std::size_t m = map.n_rees();
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<std::uint64_t> base(n);
  for_each_composition(m, tau, [&](std::span<const Exponent> beta) {
    std::fill(base.begin(), base.end(), 0);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        base[i] += std::uint64_t{beta[j]} * map.generators()[j].ground(i);
      }
    }
    for_each_bounded(n, ground_bound, [&](std::span<const Exponent> g) {
      MonomialBuilder img(n, 1);
      for (std::size_t i = 0; i < n; ++i) img.add_ground(i, base[i] + g[i]);
      img.set_rees(0, tau);
      seen.insert(img.build());
    });
  });
  std::map<std::uint64_t, std::vector<Monomial>> by_degree;
  for (const auto& img : seen) by_degree[img.ground_degree()].push_back(img);
  std::vector<std::vector<Monomial>> out;
  out.reserve(by_degree.size());
  for (auto& [deg, imgs] : by_degree) {
    std::sort(imgs.begin(), imgs.end(), LexLess{});
    out.push_back(std::move(imgs));
  }
  return out;
}

void check_bounds(SearchBounds bounds) {
  if (bounds.t_degree < 1 || bounds.ground_degree < 1) {
    throw InvalidArgument("degree bounds must be at least 1");
  }
}

}  // namespace

ReesMap::ReesMap(std::vector<Monomial> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw InvalidArgument("Rees map needs at least one generator");
  n_ground_ = gens_.front().n_ground();
  for (const auto& g : gens_) {
    if (g.n_ground() != n_ground_ || g.n_rees() != 0) {
      throw DimensionMismatch("Rees map generators must be ground monomials of one ring");
    }
  }
  if (n_ground_ + gens_.size() > kMaxVariables) {
    throw InvalidArgument("Rees map source ring has too many variables");
  }
}

ReesMap ReesMap::binary(unsigned d, unsigned b) {
  if (b >= d) throw InvalidArgument("binary Rees map needs b < d");
  return ReesMap({Monomial::ground_only({d, 0}), Monomial::ground_only({0, d}),
                  Monomial::ground_only({b, d - b})});
}

ReesMap ReesMap::ternary_uniform(unsigned a, unsigned b) {
  return ReesMap({Monomial::ground_only({a, 0, 0}), Monomial::ground_only({0, a, 0}),
                  Monomial::ground_only({0, 0, a}), Monomial::ground_only({b, b, b})});
}

ReesMap ReesMap::almost_complete_intersection(std::span<const unsigned> a,
                                              std::span<const unsigned> b) {
  if (a.size() != b.size() || a.empty()) {
    throw InvalidArgument("exponent vectors must be non-empty and of equal length");
  }
  std::vector<Monomial> gens;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(Monomial::ground_variable(n, 0, i, a[i]));
  }
  std::vector<Exponent> mixed(b.begin(), b.end());
  gens.push_back(Monomial::make(mixed, std::span<const Exponent>{}));
  return ReesMap(std::move(gens));
}

Monomial ReesMap::image(const Monomial& source) const {
  require_source(*this, source);
  MonomialBuilder img(n_ground_, 1);
  for (std::size_t i = 0; i < n_ground_; ++i) {
    std::uint64_t e = source.ground(i);
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      e += std::uint64_t{source.rees(j)} * gens_[j].ground(i);
    }
    img.add_ground(i, e);
  }
  img.set_rees(0, source.rees_degree());
  return img.build();
}

Fiber fiber_enumerate(const ReesMap& map, const Monomial& image) {
  if (image.n_ground() != map.n_ground() || image.n_rees() != 1) {
    throw DimensionMismatch("image must live in the ground ring extended by T");
  }
  const std::size_t n = map.n_ground();
  const std::size_t m = map.n_rees();
  Fiber fiber{image, {}};
  std::vector<std::int64_t> rem(n);
  for_each_composition(m, image.rees(0), [&](std::span<const Exponent> beta) {
    for (std::size_t i = 0; i < n; ++i) rem[i] = image.ground(i);
    for (std::size_t j = 0; j < m; ++j) {
      if (beta[j] == 0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        rem[i] -= std::int64_t{beta[j]} * map.generators()[j].ground(i);
      }
    }
    if (std::ranges::any_of(rem, [](std::int64_t e) { return e < 0; })) return;
    MonomialBuilder src(n, m);
    for (std::size_t i = 0; i < n; ++i) src.set_ground(i, static_cast<Exponent>(rem[i]));
    for (std::size_t j = 0; j < m; ++j) src.set_rees(j, beta[j]);
    fiber.members.push_back(src.build());
  });
  std::sort(fiber.members.begin(), fiber.members.end(), LexLess{});
  return fiber;
}

std::vector<std::vector<Monomial>> connected_under_moves(
    const Fiber& fiber, std::span<const Binomial> moves) {
  std::vector<std::vector<Monomial>> components;
  component_count(fiber, moves, &components);
  return components;
}

bool binomial_in_binomial_ideal(const ReesMap& map, const Binomial& b,
                                std::span<const Binomial> generators,
                                std::size_t cap) {
  if (!map.is_kernel_binomial(b)) {
    throw NotAKernelElement(to_string(b) + " is not in the kernel of the Rees map");
  }
  std::unordered_set<Monomial, MonomialHash> seen{b.lead()};
  std::deque<Monomial> queue{b.lead()};
  bool found = false;
  while (!queue.empty() && !found) {
    Monomial u = std::move(queue.front());
    queue.pop_front();
    for_each_neighbor(u, generators, [&](Monomial v) {
      if (found || seen.contains(v)) return;
      if (v == b.trail()) found = true;
      seen.insert(v);
      if (seen.size() > cap) {
        throw SearchCapExceeded("congruence class of " + to_string(b.lead()) +
                                    " exceeded the state cap",
                                cap);
      }
      queue.push_back(std::move(v));
    });
  }
  return found;
}

bool monomial_in_mixed_ideal(const Monomial& m, std::span<const Binomial> differences,
                             std::span<const Monomial> monomials, std::size_t cap,
                             MixedSearchStats* stats) {
  auto hits = [&](const Monomial& u) {
    return std::ranges::any_of(monomials, [&](const Monomial& g) { return g.divides(u); });
  };
  std::unordered_set<Monomial, MonomialHash> seen{m};
  std::deque<Monomial> queue{m};
  bool found = hits(m);
  while (!queue.empty() && !found) {
    Monomial u = std::move(queue.front());
    queue.pop_front();
    for_each_neighbor(u, differences, [&](Monomial v) {
      if (found || seen.contains(v)) return;
      if (hits(v)) found = true;
      seen.insert(v);
      if (seen.size() > cap) {
        throw SearchCapExceeded("congruence class of " + to_string(m) +
                                    " exceeded the state cap",
                                cap);
      }
      queue.push_back(std::move(v));
    });
  }
  if (stats) stats->class_size = seen.size();
  return found;
}

GenerationReport generates_up_to(const ReesMap& map, std::span<const Binomial> moves,
                                 SearchBounds bounds, EngineOptions options) {
  check_bounds(bounds);
  for (const auto& mv : moves) {
    require_source(map, mv.lead());
    if (!map.is_kernel_binomial(mv)) {
      throw NotAKernelElement("move " + to_string(mv) + " is not a kernel binomial");
    }
  }
  GenerationReport report;
  for (unsigned tau = 0; tau <= bounds.t_degree; ++tau) {
    for (const auto& group : images_at_level(map, tau, bounds.ground_degree)) {
      std::vector<std::size_t> comps(group.size(), 0);
      std::vector<Fiber> fibers(group.size());
      if (options.workers <= 1) {
        // Sequential path stops at the first failure.
        for (std::size_t i = 0; i < group.size(); ++i) {
          fibers[i] = fiber_enumerate(map, group[i]);
          comps[i] = component_count(fibers[i], moves, nullptr);
          ++report.fibers_checked;
          if (comps[i] > 1) {
            report.pass = false;
            report.first_failure = FiberFailure{group[i], fiber_bidegree(fibers[i]),
                                                comps[i], fibers[i].members};
            return report;
          }
        }
        continue;
      }
      parallel_for(group.size(), options.workers, [&](std::size_t i) {
        fibers[i] = fiber_enumerate(map, group[i]);
        comps[i] = component_count(fibers[i], moves, nullptr);
      });
      report.fibers_checked += group.size();
      for (std::size_t i = 0; i < group.size(); ++i) {
        if (comps[i] > 1) {
          report.pass = false;
          report.first_failure = FiberFailure{group[i], fiber_bidegree(fibers[i]),
                                              comps[i], fibers[i].members};
          return report;
        }
      }
    }
  }
  return report;
}

MinimalGenerators bruteforce_min_gens(const ReesMap& map, SearchBounds bounds,
                                      std::optional<std::uint64_t> shuffle_seed,
                                      EngineOptions options) {
  check_bounds(bounds);
  MinimalGenerators out;
  std::mt19937_64 rng(shuffle_seed.value_or(0));
  for (unsigned tau = 0; tau <= bounds.t_degree; ++tau) {
    for (auto& group : images_at_level(map, tau, bounds.ground_degree)) {
      if (shuffle_seed) std::shuffle(group.begin(), group.end(), rng);
      // Moves found inside one degree never act on other fibers of the same
      // degree, so the group can be processed against a frozen move set.
      std::vector<std::vector<std::vector<Monomial>>> comps(group.size());
      std::vector<Bidegree> degrees(group.size());
      const std::vector<Binomial> frozen = out.moves;
      parallel_for(group.size(), options.workers, [&](std::size_t i) {
        Fiber f = fiber_enumerate(map, group[i]);
        degrees[i] = fiber_bidegree(f);
        comps[i] = connected_under_moves(f, frozen);
      });
      for (std::size_t i = 0; i < group.size(); ++i) {
        auto& cs = comps[i];
        if (cs.size() <= 1) continue;
        if (shuffle_seed) std::shuffle(cs.begin(), cs.end(), rng);
        for (std::size_t c = 1; c < cs.size(); ++c) {
          out.moves.emplace_back(cs[c].front(), cs[0].front());
        }
        out.count_per_bidegree[degrees[i]] += cs.size() - 1;
      }
    }
  }
  return out;
}

}  // namespace rees
