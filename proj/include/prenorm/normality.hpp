// Copyright 2026 The prenorm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRENORM_NORMALITY_HPP_
#define PRENORM_NORMALITY_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "prenorm/fq_poly.hpp"
#include "prenorm/indexed_field.hpp"
#include "prenorm/poly.hpp"

namespace prenorm {

// gcd(x^n - 1, sum_i a^{q^i} x^{n-1-i}) == 1 over F_{q^n}[x].
template <ExtensionField F>
bool is_normal_gcd(const F& field, const typename F::value_type& a) {
  using V = typename F::value_type;
  const std::uint32_t n = field.degree();
  PolyOf<F> xn(n + 1, field.zero());
  xn[0] = field.embed(field.base().neg(1));
  xn[n] = field.add(xn[n], field.one());
  poly_trim(field, xn);
  PolyOf<F> conj(n, field.zero());
  V c = a;
  for (std::uint32_t i = 0; i < n; ++i) {
    conj[n - 1 - i] = c;
    c = field.frobenius(c, 1);
  }
  poly_trim(field, conj);
  const PolyOf<F> g = poly_gcd(field, xn, conj);
  return g.size() == 1;
}

// a is normal iff L_{(x^n-1)/P}(a) != 0 for every irreducible P | x^n - 1,
// i.e. its F_q-order is not a proper divisor. The cofactors are fixed per
// field, so one tester serves a whole sweep.
template <ExtensionField F>
class NormalityTester {
 public:
  NormalityTester(const F& field, const XnFactorization& fact) : field_(&field) {
    const FqPoly xn1 = xn_minus_one(field.base(), field.degree());
    for (const FqPoly& p : fact.irreducibles()) {
      cofactors_.push_back(fq_divmod(field.base(), xn1, p).first.vec());
    }
  }

  bool operator()(const typename F::value_type& a) const {
    const F& f = *field_;
    if (f.is_zero(a)) return false;
    std::vector<typename F::value_type> conj{a};
    const std::uint32_t n = f.degree();
    for (std::uint32_t i = 1; i < n; ++i) conj.push_back(f.frobenius(conj.back(), 1));
    for (const auto& g : cofactors_) {
      auto sum = f.zero();
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] != 0) sum = f.add(sum, f.mul(f.embed(g[i]), conj[i]));
      }
      if (f.is_zero(sum)) return false;
    }
    return true;
  }

 private:
  const F* field_;
  std::vector<std::vector<Fq>> cofactors_;
};

template <ExtensionField F>
bool is_normal_order(const F& field, const XnFactorization& fact, const typename F::value_type& a) {
  return NormalityTester<F>(field, fact)(a);
}

// Phi_q(x^n - 1).
BigInt count_normal(const XnFactorization& fact);

// normal[v] for every canonical index v of the field.
std::vector<std::uint8_t> normal_bitmap(const IndexedField& field, const XnFactorization& fact,
                                        unsigned jobs = 1);

// Every normal element in canonical order; kBudgetExceeded when q^n > budget.
std::vector<Element> normal_elements(const std::shared_ptr<const FieldContext>& ctx, std::uint64_t budget);

// Uniform field elements filtered to normal ones; the stream is a pure
// function of the seed.
class RandomNormalStream {
 public:
  RandomNormalStream(const FieldContext& ctx, const XnFactorization& fact, std::uint64_t seed)
      : ctx_(&ctx), tester_(ctx, fact), rng_(seed) {}

  Element next();
  std::uint64_t draws() const noexcept { return draws_; }

 private:
  const FieldContext* ctx_;
  NormalityTester<FieldContext> tester_;
  std::mt19937_64 rng_;
  std::uint64_t draws_ = 0;
};

}  // namespace prenorm

#endif  // PRENORM_NORMALITY_HPP_
