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

#include "rees/binary.hpp"

#include <algorithm>
#include <numeric>

#include "rees/errors.hpp"

namespace rees {

namespace {

Monomial bin_mono(Exponent x, Exponent y, Exponent t, Exponent u, Exponent v) {
  return Monomial::with_rees({x, y}, {t, u, v});
}

Exponent narrow(std::uint64_t e) {
  if (e > kMaxExponent) throw ExponentOverflow("exponent " + std::to_string(e));
  return static_cast<Exponent>(e);
}

// f = lead - trail = c1 p + c2 q under the deterministic assignment rule.
std::optional<std::pair<SignedMonomial, SignedMonomial>> assign_row(const Binomial& f,
                                                                    const Pivot& pivot) {
  const auto& [p, q] = pivot;
  if (auto a = mono_divide(f.lead(), p)) {
    if (auto c = mono_divide(f.trail(), q)) {
      return std::pair{SignedMonomial{1, *a}, SignedMonomial{-1, *c}};
    }
  }
  if (auto a = mono_divide(f.trail(), p)) {
    if (auto c = mono_divide(f.lead(), q)) {
      return std::pair{SignedMonomial{-1, *a}, SignedMonomial{1, *c}};
    }
  }
  return std::nullopt;
}

Polynomial as_poly(const SignedMonomial& s) { return Polynomial::monomial(s.monomial, s.sign); }

}  // namespace

EuclidData::EuclidData(unsigned d, unsigned b) : d_(d), b_(b) {
  if (b < 1 || b >= d) {
    throw InvalidArgument("Euclid data needs d > b >= 1, got d=" + std::to_string(d) +
                          ", b=" + std::to_string(b));
  }
  rem_ = {d, b};
  continuants_ = {0, 1};
  while (rem_.back() != 0) {
    unsigned prev = rem_[rem_.size() - 2];
    unsigned cur = rem_.back();
    unsigned c = prev / cur;
    quotients_.push_back(c);
    rem_.push_back(prev % cur);
    std::size_t n = continuants_.size();
    continuants_.push_back(c * continuants_[n - 1] + continuants_[n - 2]);
  }
}

unsigned EuclidData::remainder(int k) const {
  if (k < -1 || k > static_cast<int>(steps())) {
    throw InvalidArgument("remainder index " + std::to_string(k) + " out of range");
  }
  return rem_[static_cast<std::size_t>(k + 1)];
}

unsigned EuclidData::quotient(int k) const {
  if (k < 1 || k > static_cast<int>(steps())) {
    throw InvalidArgument("quotient index " + std::to_string(k) + " out of range");
  }
  return quotients_[static_cast<std::size_t>(k - 1)];
}

std::uint64_t EuclidData::continuant(int k) const {
  if (k < -1 || k > static_cast<int>(steps())) {
    throw InvalidArgument("continuant index " + std::to_string(k) + " out of range");
  }
  return continuants_[static_cast<std::size_t>(k + 1)];
}

std::vector<unsigned> EuclidData::remainders() const {
  return {rem_.begin() + 2, rem_.end() - 1};
}

EuclidData euclid_sequence(unsigned d, unsigned b) {
  if (b < 1 || b >= d) {
    throw InvalidArgument("need d > b >= 1, got d=" + std::to_string(d) +
                          ", b=" + std::to_string(b));
  }
  if (std::gcd(d, b) != 1) {
    throw InvalidArgument("gcd(" + std::to_string(d) + ", " + std::to_string(b) +
                          ") != 1; reparametrize first");
  }
  return EuclidData(d, b);
}

namespace {

void check_index(const EuclidData& e, unsigned k, unsigned i) {
  if (k < 1 || k > e.steps() || i < 1 || i > e.quotient(static_cast<int>(k))) {
    throw InvalidArgument("generator index (" + std::to_string(k) + ", " +
                          std::to_string(i) + ") out of range");
  }
}

// (D, N): x/y-exponent d_{k-2} - i d_{k-1} and v-exponent i e_{k-1} + e_{k-2}.
std::pair<std::uint64_t, std::uint64_t> shape(const EuclidData& e, unsigned k, unsigned i) {
  const int kk = static_cast<int>(k);
  std::uint64_t big = e.remainder(kk - 2);
  std::uint64_t step = std::uint64_t{i} * e.remainder(kk - 1);
  if (step > big) throw VerificationFailure("negative ground exponent in generator");
  return {big - step, i * e.continuant(kk - 1) + e.continuant(kk - 2)};
}

}  // namespace

ExponentCheck pk_qk(const EuclidData& e, unsigned k, unsigned i) {
  check_index(e, k, i);
  auto [D, N] = shape(e, k, i);
  const std::uint64_t weight = (k % 2 == 1) ? e.b() : e.d() - e.b();
  const std::uint64_t numerator = D + weight * N;
  if (numerator % e.d() != 0) {
    throw VerificationFailure("d=" + std::to_string(e.d()) + " does not divide " +
                              std::to_string(numerator) + " at (k, i) = (" +
                              std::to_string(k) + ", " + std::to_string(i) + ")");
  }
  ExponentCheck out{numerator / e.d(), N};
  if (out.value > out.bound) {
    throw VerificationFailure("exponent " + std::to_string(out.value) +
                              " exceeds v-degree " + std::to_string(N));
  }
  return out;
}

Binomial make_generator(const EuclidData& e, unsigned k, unsigned i) {
  if (k == 0 && i == 0) {
    return Binomial(bin_mono(0, e.b(), 0, 0, 1), bin_mono(e.b(), 0, 0, 1, 0));
  }
  check_index(e, k, i);
  auto [D, N] = shape(e, k, i);
  const auto pq = pk_qk(e, k, i).value;
  const Exponent dd = narrow(D), nn = narrow(N);
  if (k % 2 == 1) {
    return Binomial(bin_mono(dd, 0, 0, 0, nn),
                    bin_mono(0, dd, narrow(pq), narrow(N - pq), 0));
  }
  return Binomial(bin_mono(0, dd, 0, 0, nn), bin_mono(dd, 0, narrow(N - pq), narrow(pq), 0));
}

ContentMatrix content_matrix(const Binomial& f, const Binomial& g, const Pivot& pivot) {
  const auto& [p, q] = pivot;
  if (!p.is_ground() || !q.is_ground() || !mono_gcd(p, q).is_unit() || p.is_unit() ||
      q.is_unit()) {
    throw InvalidArgument("pivot (" + to_string(p) + ", " + to_string(q) +
                          ") is not a coprime pair of non-unit ground monomials");
  }
  auto rf = assign_row(f, pivot);
  auto rg = assign_row(g, pivot);
  if (!rf || !rg) {
    throw InvalidArgument("no content matrix for " + to_string(rf ? g : f) +
                          " over pivot (" + to_string(p) + ", " + to_string(q) + ")");
  }
  return {{rf->first, rf->second, rg->first, rg->second}, pivot};
}

Polynomial content_determinant(const ContentMatrix& cm) {
  const auto& c = cm.entries;
  return as_poly(c[0]) * as_poly(c[3]) - as_poly(c[1]) * as_poly(c[2]);
}

Binomial sylvester_det(const Binomial& f, const Binomial& g, const Pivot& pivot) {
  const auto& c = content_matrix(f, g, pivot).entries;
  Monomial a = c[0].monomial * c[3].monomial;
  Monomial b = c[1].monomial * c[2].monomial;
  if (a == b) throw InvalidArgument("Sylvester determinant vanishes");
  // Signs: the two products always carry equal signs under the assignment rule.
  return Binomial(a, b);
}

bool cramer_identities_hold(const Binomial& f, const Binomial& g, const Pivot& pivot) {
  ContentMatrix cm = content_matrix(f, g, pivot);
  const auto& c = cm.entries;
  Polynomial det = content_determinant(cm);
  Polynomial pf = Polynomial::binomial(f), pg = Polynomial::binomial(g);
  Polynomial pp = Polynomial::monomial(pivot.first), pq = Polynomial::monomial(pivot.second);
  bool row_f = poly_identity_check(pf, as_poly(c[0]) * pp + as_poly(c[1]) * pq);
  bool row_g = poly_identity_check(pg, as_poly(c[2]) * pp + as_poly(c[3]) * pq);
  bool first = poly_identity_check(det * pp, as_poly(c[3]) * pf - as_poly(c[1]) * pg);
  bool second = poly_identity_check(det * pq, -(as_poly(c[2]) * pf) + as_poly(c[0]) * pg);
  return row_f && row_g && first && second;
}

std::string to_string(SigmaOrigin origin) {
  switch (origin) {
    case SigmaOrigin::kSyzygy: return "syzygy";
    case SigmaOrigin::kSylvester: return "sylvester";
    case SigmaOrigin::kImplicit: return "implicit";
  }
  return "?";
}

std::vector<Binomial> SigmaSet::binomials() const {
  std::vector<Binomial> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.binomial);
  return out;
}

SigmaSet sigma_set(unsigned d, unsigned b) {
  SigmaSet sigma{euclid_sequence(d, b), {}};
  const EuclidData& e = sigma.euclid;
  auto& out = sigma.entries;
  out.push_back({make_generator(e, 0, 0), SigmaOrigin::kSyzygy, 0, 0, {}, {}});
  out.push_back({make_generator(e, 1, 1), SigmaOrigin::kSyzygy, 1, 1, {}, {}});

  auto pivot_at = [&](int k) {
    Exponent r = e.remainder(k);
    return Pivot{bin_mono(r, 0, 0, 0, 0), bin_mono(0, r, 0, 0, 0)};
  };
  auto push_det = [&](std::size_t anchor, std::size_t cur, Pivot pivot, unsigned k,
                      unsigned i) {
    Binomial x = sylvester_det(out[anchor].binomial, out[cur].binomial, pivot);
    if (x != make_generator(e, k, i)) {
      throw VerificationFailure("Sylvester chain gives " + to_string(x) + " at (" +
                                std::to_string(k) + ", " + std::to_string(i) +
                                "), closed form " + to_string(make_generator(e, k, i)));
    }
    out.push_back({x, SigmaOrigin::kSylvester, k, i, std::pair{anchor, cur}, pivot});
  };

  std::size_t anchor = 0, cur = 1;
  for (unsigned k = 1; k <= e.steps(); ++k) {
    const int kk = static_cast<int>(k);
    for (unsigned i = 2; i <= e.quotient(kk); ++i) {
      push_det(anchor, cur, pivot_at(kk - 1), k, i);
      cur = out.size() - 1;
    }
    if (k < e.steps()) {
      push_det(anchor, cur, pivot_at(kk), k + 1, 1);
      anchor = cur;
      cur = out.size() - 1;
    }
  }
  out.back().origin = SigmaOrigin::kImplicit;
  return sigma;
}

std::vector<Binomial> telescopic_subideal(const SigmaSet& sigma, unsigned k) {
  if (k > sigma.euclid.steps()) {
    throw InvalidArgument("telescopic index " + std::to_string(k) + " out of range");
  }
  std::vector<Binomial> out;
  for (const auto& entry : sigma.entries) {
    if (entry.k <= k) out.push_back(entry.binomial);
  }
  return out;
}

std::vector<ColonCheck> verify_telescopic_colons(const SigmaSet& sigma, std::size_t cap) {
  const ReesMap map = ReesMap::binary(sigma.euclid.d(), sigma.euclid.b());
  const std::vector<Binomial> all = sigma.binomials();
  std::vector<ColonCheck> out;
  for (std::size_t idx = 0; idx < sigma.entries.size(); ++idx) {
    const auto& entry = sigma.entries[idx];
    if (!entry.pivot) continue;
    std::span<const Binomial> prefix(all.data(), idx);
    const Binomial& x = entry.binomial;
    ColonCheck check;
    check.index = idx;
    check.pivot_exponent = entry.pivot->first.ground(0);
    const Exponent r = check.pivot_exponent;
    check.contains_pivot =
        binomial_in_binomial_ideal(map, x.times(entry.pivot->first), prefix, cap) &&
        binomial_in_binomial_ideal(map, x.times(entry.pivot->second), prefix, cap);
    check.excludes_others = true;
    for (Exponent i = 0; i < r && check.excludes_others; ++i) {
      for (Exponent j = 0; j < r && check.excludes_others; ++j) {
        for (int rv = -1; rv < 3; ++rv) {
          Exponent t = rv == 0, u = rv == 1, v = rv == 2;
          ++check.probes;
          if (binomial_in_binomial_ideal(map, x.times(bin_mono(i, j, t, u, v)), prefix,
                                         cap)) {
            check.excludes_others = false;
            break;
          }
        }
      }
    }
    out.push_back(check);
  }
  return out;
}

bool Reparametrization::is_identity() const {
  return std::ranges::all_of(c, [](unsigned x) { return x == 1; });
}

Monomial Reparametrization::apply(const Monomial& m) const {
  if (m.n_ground() != c.size()) {
    throw DimensionMismatch("monomial ambient does not match the substitution");
  }
  MonomialBuilder out(m);
  for (std::size_t i = 0; i < c.size(); ++i) {
    out.set_ground(i, narrow(std::uint64_t{m.ground(i)} * c[i]));
  }
  return out.build();
}

Binomial Reparametrization::apply(const Binomial& b) const {
  return Binomial(apply(b.lead()), apply(b.trail()));
}

Reparametrization reparametrize(std::span<const unsigned> a, std::span<const unsigned> b) {
  if (a.size() != b.size() || a.empty()) {
    throw InvalidArgument("exponent vectors must be non-empty and of equal length");
  }
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] >= a[i]) {
      throw InvalidArgument("need 0 <= b_i < a_i at index " + std::to_string(i));
    }
    if (b[i] != 0) ++nonzero;
  }
  if (nonzero < 2) throw InvalidArgument("need at least two nonzero b_i");
  Reparametrization r;
  r.a.assign(a.begin(), a.end());
  r.b.assign(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i) {
    unsigned ci = b[i] != 0 ? std::gcd(a[i], b[i]) : 1;
    r.c.push_back(ci);
    r.reduced_a.push_back(a[i] / ci);
    r.reduced_b.push_back(b[i] / ci);
  }
  return r;
}

}  // namespace rees
