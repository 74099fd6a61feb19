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

#include <gtest/gtest.h>

#include <random>

#include "prenorm/fq_poly.hpp"
#include "prenorm/indexed_field.hpp"
#include "test_util.hpp"

namespace prenorm {
namespace {

using testing::prime_powers_up_to;
using testing::small_fields;
using testing::trial_factor_distinct;

FqPoly P(std::vector<Fq> c) { return FqPoly(std::move(c)); }

TEST(PolyGcd, Examples) {
  const BaseField f2(2, 1);
  const BaseField f3(3, 1);
  EXPECT_EQ(fq_gcd(f3, P({2, 2}), FqPoly()), P({1, 1}));
  EXPECT_EQ(fq_gcd(f3, P({2, 0, 1}), P({2, 1})), P({2, 1}));
  EXPECT_EQ(fq_gcd(f2, P({1, 1, 0, 1}), P({1, 1, 1})), P({1}));
  try {
    fq_gcd(f2, FqPoly(), FqPoly());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBothZero);
  }
}

TEST(PolyText, RoundTripAndPretty) {
  const BaseField f4(2, 2);
  const FqPoly f = P({2, 0, 3, 1});
  EXPECT_EQ(format_poly(f4, f), "[0,1],[0,0],[1,1],[1,0]");
  EXPECT_EQ(parse_poly(f4, format_poly(f4, f)), f);
  EXPECT_EQ(pretty_poly(f4, f), "x^3+(t+1)x^2+t");
  const BaseField f3(3, 1);
  EXPECT_EQ(parse_poly(f3, "2, 0, 1"), P({2, 0, 1}));
  EXPECT_EQ(pretty_poly(f3, P({2, 0, 1})), "x^2+2");
}

TEST(ApplyLf, BasicActions) {
  auto ctx = build_context(2, 1, 4);
  const auto& fq = ctx->base();
  const FqPoly xn1 = xn_minus_one(fq, 4);
  const FqPoly xm1 = P({fq.neg(1), 1});
  std::uint64_t kernel = 0;
  for (int v = 0; v < 16; ++v) {
    const Element a = ctx->from_index(v);
    EXPECT_EQ(apply_lf(*ctx, FqPoly::constant(1), a), a);
    EXPECT_TRUE(ctx->is_zero(apply_lf(*ctx, xn1, a)));
    const Element l = apply_lf(*ctx, xm1, a);
    EXPECT_EQ(l, ctx->sub(ctx->pow(a, 2), a));
    if (ctx->is_zero(l)) {
      ++kernel;
      EXPECT_TRUE(ctx->is_in_subfield(a, 1));
    }
  }
  EXPECT_EQ(kernel, 2u);
}

TEST(ApplyLf, ModuleAxioms) {
  std::mt19937_64 rng(5);
  for (const auto& f : small_fields(1024)) {
    auto ctx = build_context(f.p, f.s, f.n);
    const auto& fq = ctx->base();
    auto rand_poly = [&] {
      std::vector<Fq> c(2 * f.n);
      for (auto& x : c) x = static_cast<Fq>(uniform_below(rng, f.q));
      return FqPoly(std::move(c));
    };
    const FqPoly g = rand_poly();
    const FqPoly h = rand_poly();
    for (std::uint64_t v = 0; v < f.size; ++v) {
      const Element a = ctx->from_index(v);
      const Element b = random_element(*ctx, rng);
      ASSERT_EQ(apply_lf(*ctx, fq_add(fq, g, h), a), ctx->add(apply_lf(*ctx, g, a), apply_lf(*ctx, h, a)));
      ASSERT_EQ(apply_lf(*ctx, fq_mul(fq, g, h), a), apply_lf(*ctx, g, apply_lf(*ctx, h, a)));
      ASSERT_EQ(apply_lf(*ctx, g, ctx->add(a, b)), ctx->add(apply_lf(*ctx, g, a), apply_lf(*ctx, g, b)));
    }
  }
}

TEST(FactorXn, Examples) {
  {
    auto ctx = build_context(2, 1, 4);
    const auto fact = factor_xn_minus_1(*ctx);
    ASSERT_EQ(fact.distinct_count(), 1u);
    EXPECT_EQ(fact.irreducibles()[0], P({1, 1}));
    EXPECT_EQ(fact.multiplicity(), 4u);
    EXPECT_EQ(w_exact(fact), 2);
  }
  {
    auto ctx = build_context(2, 1, 3);
    const auto fact = factor_xn_minus_1(*ctx);
    EXPECT_EQ(fact.irreducibles(), (std::vector<FqPoly>{P({1, 1}), P({1, 1, 1})}));
    EXPECT_EQ(fact.multiplicity(), 1u);
  }
  {
    auto ctx = build_context(2, 2, 3);
    const auto fact = factor_xn_minus_1(*ctx);
    ASSERT_EQ(fact.distinct_count(), 3u);
    for (const auto& f : fact.irreducibles()) EXPECT_EQ(f.degree(), 1);
  }
  {
    auto ctx = build_context(2, 1, 6);
    EXPECT_EQ(w_exact(factor_xn_minus_1(*ctx)), 4);
  }
  EXPECT_EQ(w_exact(xn_shape(2, 30)), 32);
  EXPECT_EQ(w_exact(xn_shape(2, 6)), 4);
  EXPECT_EQ(w_exact(xn_shape(2, 4)), 2);
}

// Product, irreducibility and distinctness against trial-division
// factoring, for q <= 9 and n <= 12.
TEST(FactorXn, MatchesTrialDivision) {
  for (std::uint64_t q : prime_powers_up_to(9)) {
    const PrimePower pp = PrimePower::from_q(q);
    for (std::uint32_t n = 1; n <= 12; ++n) {
      SCOPED_TRACE("q=" + std::to_string(q) + " n=" + std::to_string(n));
      auto ctx = build_context(pp.p, pp.s, n);
      const auto& fq = ctx->base();
      const auto fact = factor_xn_minus_1(*ctx);
      EXPECT_EQ(fact.expand(fact.full()), xn_minus_one(fq, n));
      auto oracle = trial_factor_distinct(fq, xn_minus_one(fq, n));
      EXPECT_EQ(oracle.size(), fact.distinct_count());
      EXPECT_EQ(fact.shape().distinct, fact.distinct_count());
      for (const auto& f : fact.irreducibles()) {
        EXPECT_TRUE(f.is_monic());
        EXPECT_NE(std::find(oracle.begin(), oracle.end(), f), oracle.end());
      }
      EXPECT_EQ(w_exact(fact), ipow(BigInt(2), oracle.size()));
    }
  }
}

TEST(ArithFunctions, Examples) {
  auto ctx = build_context(2, 1, 12);
  const auto fact = factor_xn_minus_1(*ctx);
  const auto one = arith_functions(fact, FqPoly::constant(1));
  EXPECT_EQ(one.phi, 1);
  EXPECT_EQ(one.mu, 1);
  EXPECT_TRUE(one.squarefree);
  const auto x1_4 = arith_functions(fact, P({1, 0, 0, 0, 1}));
  EXPECT_EQ(x1_4.phi, 8);
  EXPECT_EQ(x1_4.mu, 0);
  EXPECT_FALSE(x1_4.squarefree);
  const auto pair = arith_functions(fact, fq_mul(ctx->base(), P({1, 1}), P({1, 1, 1})));
  EXPECT_EQ(pair.phi, 3);
  EXPECT_EQ(pair.mu, 1);
  EXPECT_EQ(arith_functions(fact, fact.full()).phi, 1536);
  try {
    arith_functions(fact, P({1, 1, 0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotADivisor);
  }
}

TEST(ArithFunctions, DivisorSumIsFieldSize) {
  for (const auto& f : small_fields(4096)) {
    auto ctx = build_context(f.p, f.s, f.n);
    const auto fact = factor_xn_minus_1(*ctx);
    BigInt total = 0;
    std::uint64_t seen = 0;
    fact.for_each_divisor([&](const DivisorExponents& e) {
      total += arith_functions(fact, e).phi;
      ++seen;
    });
    EXPECT_EQ(total, ctx->size());
    EXPECT_EQ(seen, fact.divisor_count());
  }
}

TEST(ElementOrder, Examples) {
  auto ctx = build_context(2, 1, 4);
  const auto fact = factor_xn_minus_1(*ctx);
  EXPECT_EQ(element_order(*ctx, fact, ctx->zero()), FqPoly::constant(1));
  EXPECT_EQ(element_order(*ctx, fact, ctx->one()), P({1, 1}));
  // Normal elements by independent linear algebra: conjugates span F_16.
  const auto& fq = ctx->base();
  const FqPoly xn1 = xn_minus_one(fq, 4);
  int normal = 0;
  for (int v = 0; v < 16; ++v) {
    const Element a = ctx->from_index(v);
    std::set<BigInt> span;
    for (int mask = 0; mask < 16; ++mask) {
      Element s = ctx->zero();
      for (int i = 0; i < 4; ++i) {
        if (mask >> i & 1) s = ctx->add(s, ctx->frobenius(a, i));
      }
      span.insert(ctx->to_index(s));
    }
    const bool is_normal = span.size() == 16;
    normal += is_normal;
    EXPECT_EQ(element_order(*ctx, fact, a) == xn1, is_normal);
  }
  EXPECT_EQ(normal, 8);
}

TEST(ElementOrder, AlwaysDividesAndAnnihilates) {
  for (const auto& f : small_fields(1024)) {
    auto ctx = build_context(f.p, f.s, f.n);
    const IndexedField idx(ctx);
    const auto fact = factor_xn_minus_1(*ctx);
    for (std::uint32_t v = 0; v < f.size; ++v) {
      const FqPoly g = element_order(idx, fact, v);
      ASSERT_TRUE(idx.is_zero(apply_lf(idx, g, v)));
      ASSERT_TRUE(fq_divmod(ctx->base(), xn_minus_one(ctx->base(), f.n), g).second.is_zero());
      ASSERT_EQ(g, element_order(*ctx, fact, ctx->from_index(v)));
    }
  }
}

}  // namespace
}  // namespace prenorm
