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

#include <map>
#include <random>
#include <set>

#include "prenorm/norm_system.hpp"
#include "prenorm/normality.hpp"
#include "test_util.hpp"

namespace prenorm {
namespace {

using testing::small_fields;

// Oracle norm: product of the conjugates a^{q^{d i}}, 0 <= i < n/d.
Element conjugate_product(const FieldContext& ctx, const Element& a, std::uint64_t d) {
  Element out = ctx.one();
  Element c = a;
  for (std::uint64_t i = 0; i < ctx.degree() / d; ++i) {
    out = ctx.mul(out, c);
    c = ctx.frobenius(c, d);
  }
  return out;
}

TEST(NormTo, Examples) {
  auto f4 = build_context(2, 1, 2);
  EXPECT_EQ(norm_to(*f4, f4->one(), 1), f4->one());
  EXPECT_EQ(norm_to(*f4, f4->basis(1), 1), f4->one());
  EXPECT_EQ(norm_to(*f4, f4->basis(1), 2), f4->basis(1));
  EXPECT_EQ(norm_to(*f4, f4->zero(), 1), f4->zero());
  try {
    norm_to(*f4, f4->one(), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotADivisor);
  }
}

TEST(NormTo, MatchesConjugateProductAndTransitivity) {
  for (const auto& f : small_fields(4096, 2)) {
    auto ctx = build_context(f.p, f.s, f.n);
    const IndexedField idx(ctx);
    const auto divs = divisors(f.n);
    for (std::uint32_t v = 1; v < f.size; ++v) {
      const Element a = ctx->from_index(v);
      for (std::uint64_t d : divs) {
        const auto nd = norm_to(idx, v, d);
        ASSERT_TRUE(idx.is_in_subfield(nd, d));
        if (f.size <= 1024) ASSERT_EQ(idx.to_element(nd), conjugate_product(*ctx, a, d));
        for (std::uint64_t e : divs) {
          if (d % e == 0) ASSERT_EQ(norm_rel(idx, nd, d, e), norm_to(idx, v, e));
        }
      }
    }
  }
}

TEST(NormRel, ExamplesAndErrors) {
  auto ctx = build_context(2, 1, 6);
  const Element g = ctx->canonical_primitive();
  const Element a = ctx->pow(g, 21);  // generator of F_4^*
  EXPECT_EQ(norm_rel(*ctx, a, 2, 1), ctx->pow(a, 3));
  EXPECT_EQ(norm_rel(*ctx, a, 2, 2), a);
  try {
    norm_rel(*ctx, g, 2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInSubfield);
  }
  try {
    norm_rel(*ctx, a, 4, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotADivisor);
  }
}

TEST(Gamma, Enumeration) {
  auto pairs = [](const std::vector<DivisorTuple>& ts) {
    std::vector<std::vector<std::uint64_t>> out;
    for (const auto& t : ts) out.push_back(t.d);
    return out;
  };
  // Oracle: all pairs of proper divisors, neither dividing the other.
  std::vector<std::vector<std::uint64_t>> oracle;
  for (std::uint64_t a = 1; a < 12; ++a) {
    for (std::uint64_t b = a + 1; b < 12; ++b) {
      if (12 % a == 0 && 12 % b == 0 && b % a != 0) oracle.push_back({a, b});
    }
  }
  EXPECT_EQ(pairs(enumerate_gamma(12, 2)), oracle);
  EXPECT_EQ(oracle, (std::vector<std::vector<std::uint64_t>>{{2, 3}, {3, 4}, {4, 6}}));
  const auto t30 = pairs(enumerate_gamma(30, 3));
  EXPECT_NE(std::find(t30.begin(), t30.end(), std::vector<std::uint64_t>{2, 3, 5}), t30.end());
  EXPECT_TRUE(enumerate_gamma(16, 2).empty());
  EXPECT_TRUE(enumerate_gamma(27, 2).empty());
  EXPECT_EQ(enumerate_gamma(12, 1).size(), 5u);
}

TEST(Gamma, TupleValidation) {
  EXPECT_THROW(DivisorTuple::make(12, {2, 4}), Error);
  EXPECT_NO_THROW(DivisorTuple::make(12, {2, 4}, true));
  EXPECT_THROW(DivisorTuple::make(12, {5}), Error);
  EXPECT_THROW(DivisorTuple::make(12, {12}), Error);
  EXPECT_THROW(DivisorTuple::make(12, {3, 2}), Error);
  try {
    DivisorTuple::make(12, {2, 4});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidTuple);
  }
}

TEST(FiberCount, Formulas) {
  const auto d23 = DivisorTuple::make(6, {2, 3});
  EXPECT_EQ(fiber_count(2, d23), 3);
  EXPECT_EQ(*fiber_count_coprime(2, d23), 3);
  EXPECT_EQ(fiber_count(5, DivisorTuple::make(4, {2})), (ipow(BigInt(5), 4) - 1) / 24);
  const auto d235 = DivisorTuple::make(30, {2, 3, 5});
  const BigInt expect = ((BigInt(1) << 30) - 1) / (3 * 7 * 31);
  EXPECT_EQ(fiber_count(2, d235), expect);
  EXPECT_EQ(*fiber_count_coprime(2, d235), expect);
  EXPECT_FALSE(fiber_count_coprime(2, DivisorTuple::make(12, {4, 6})).has_value());
  for (std::uint64_t q : {2, 3, 4, 7, 101}) {
    for (const auto& D : enumerate_tuples(60, 3)) {
      if (auto c = fiber_count_coprime(q, D)) ASSERT_EQ(*c, fiber_count(q, D)) << D.to_string();
    }
  }
}

TEST(Crt, NonCoprimeModuli) {
  auto r = generalized_crt({BigInt(2), BigInt(5)}, {BigInt(6), BigInt(9)});
  ASSERT_TRUE(r.consistent);
  EXPECT_EQ(r.modulus, 18);
  EXPECT_EQ(r.residue, 14);
  auto bad = generalized_crt({BigInt(1), BigInt(2)}, {BigInt(6), BigInt(9)});
  EXPECT_FALSE(bad.consistent);
  EXPECT_EQ(bad.failed_at, 1u);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    std::vector<BigInt> mods, res;
    const std::uint64_t x = uniform_below(rng, 100000);
    for (int k = 0; k < 3; ++k) {
      const std::uint64_t m = 1 + uniform_below(rng, 60);
      mods.emplace_back(m);
      res.emplace_back(x % m);
    }
    auto c = generalized_crt(res, mods);
    ASSERT_TRUE(c.consistent);
    for (int k = 0; k < 3; ++k) ASSERT_EQ(c.residue % mods[k], res[k]);
    ASSERT_EQ(BigInt(x) % c.modulus, c.residue);
  }
}

TEST(Admissible, Examples) {
  auto ctx = build_context(2, 1, 6);
  const Element g = ctx->canonical_primitive();
  Prescription<Element> single{DivisorTuple::make(6, {2}), {ctx->pow(g, 21)}};
  EXPECT_TRUE(check_admissible(*ctx, single).admissible);
  EXPECT_EQ(single.admissible, Admissibility::kYes);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 7; ++b) {
      Prescription<Element> P{DivisorTuple::make(6, {2, 3}), {ctx->pow(g, 21 * a), ctx->pow(g, 9 * b)}};
      EXPECT_TRUE(check_admissible(*ctx, P).admissible);
    }
  }
}

TEST(Admissible, RelaxedInadmissible) {
  auto ctx = build_context(2, 1, 12);
  const IndexedField idx(ctx);
  const auto D = DivisorTuple::make(12, {2, 4}, true);
  // a_1 generates F_4^*, a_2 = 1 has N_{4/2}(a_2) = 1 != a_1.
  const std::uint32_t a1 = idx.exp(4095 / 3);
  Prescription<std::uint32_t> P{D, {a1, idx.one()}};
  const auto rep = check_admissible(idx, P);
  EXPECT_FALSE(rep.admissible);
  ASSERT_TRUE(rep.violated.has_value());
  EXPECT_EQ(*rep.violated, (std::pair<std::size_t, std::size_t>{0, 1}));
  EXPECT_EQ(P.admissible, Admissibility::kNo);
  try {
    solve_prescribed(idx, P);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAdmissible);
  }
  // With a_2 in F_16 such that N_{4/2}(a_2) = a_1 the implied norm holds.
  for (std::uint32_t v = 1; v < 4096; ++v) {
    if (!idx.is_in_subfield(v, 4) || norm_rel(idx, v, 4, 2) != a1) continue;
    Prescription<std::uint32_t> Q{D, {a1, v}};
    ASSERT_TRUE(check_admissible(idx, Q).admissible);
    const auto sol = solve_prescribed(idx, Q);
    EXPECT_EQ(sol.count, fiber_count(2, DivisorTuple::make(12, {4})));
  }
}

TEST(Solve, TrivialNorms) {
  auto ctx = build_context(3, 1, 6);
  const auto D = DivisorTuple::make(6, {2, 3});
  Prescription<Element> P{D, {ctx->one(), ctx->one()}};
  const auto sol = solve_prescribed(*ctx, P);
  EXPECT_EQ(sol.s0, 0);
  EXPECT_EQ(sol.L, 8 * 26 / 2);
  EXPECT_EQ(sol.count, fiber_count(3, D));
}

// Solver fibers equal brute-force fibers as sets, on both backends.
TEST(Solve, FiberMatchesBruteForceF64) {
  auto ctx = build_context(2, 1, 6);
  const IndexedField idx(ctx);
  const auto D = DivisorTuple::make(6, {2, 3});
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::set<std::uint32_t>> brute;
  for (std::uint32_t v = 1; v < 64; ++v) brute[{norm_to(idx, v, 2), norm_to(idx, v, 3)}].insert(v);
  EXPECT_EQ(brute.size(), 21u);
  for (const auto& [key, members] : brute) {
    EXPECT_EQ(members.size(), 3u);
    Prescription<std::uint32_t> P{D, {key.first, key.second}};
    const auto sol = solve_prescribed(idx, P);
    std::set<std::uint32_t> got;
    for (BigInt j = 0; j < sol.count; ++j) got.insert(idx.pow(idx.canonical_primitive(), sol.s0 + j * sol.L));
    EXPECT_EQ(got, members);
    Prescription<Element> PE{D, {idx.to_element(key.first), idx.to_element(key.second)}};
    const auto sol2 = solve_prescribed(*ctx, PE);
    EXPECT_EQ(sol2.s0, sol.s0);
    EXPECT_EQ(sol2.L, sol.L);
  }
}

TEST(DiscreteLog, BabyStepGiantStep) {
  auto ctx = build_context(2, 1, 24);
  const Element g = ctx->canonical_primitive();
  std::mt19937_64 rng(9);
  for (int i = 0; i < 3; ++i) {
    const BigInt k = uniform_below(rng, ctx->group_order());
    EXPECT_EQ(discrete_log(*ctx, g, ctx->pow(g, k), ctx->group_order()), k);
  }
  try {
    discrete_log(*ctx, g, g, ctx->group_order(), 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDiscreteLogBudget);
  }
}

TEST(FindNormal, F9Exception) {
  auto ctx = build_context(3, 1, 2);
  const auto fact = factor_xn_minus_1(*ctx);
  const auto D = DivisorTuple::make(2, {1});
  Prescription<Element> plus{D, {ctx->one()}};
  const auto r1 = find_normal_prescribed(*ctx, fact, plus);
  EXPECT_EQ(r1.status, SearchStatus::kNotFound);
  EXPECT_EQ(r1.scanned, 4);
  Prescription<Element> minus{D, {ctx->embed(2)}};
  const auto r2 = find_normal_prescribed(*ctx, fact, minus);
  ASSERT_EQ(r2.status, SearchStatus::kFound);
  EXPECT_TRUE(is_normal_gcd(*ctx, r2.witness));
  EXPECT_EQ(norm_to(*ctx, r2.witness, 1), ctx->embed(2));
  EXPECT_EQ(ctx->pow(ctx->canonical_primitive(), r2.exponent), r2.witness);
  SearchOptions tiny;
  tiny.scan_budget = 2;
  EXPECT_EQ(find_normal_prescribed(*ctx, fact, plus, tiny).status, SearchStatus::kInconclusive);
}

TEST(FindNormal, F64PairAgainstBruteForce) {
  auto ctx = build_context(2, 1, 6);
  const IndexedField idx(ctx);
  const auto fact = factor_xn_minus_1(*ctx);
  const NormalityTester<IndexedField> normal(idx, fact);
  const auto D = DivisorTuple::make(6, {2, 3});
  // Norms (1, 1) force a^3 = 1, so the fiber lies in F_4.
  Prescription<std::uint32_t> ones{D, {1, 1}};
  EXPECT_EQ(find_normal_prescribed(idx, fact, ones).status, SearchStatus::kNotFound);
  int found = 0;
  for (std::uint32_t a = 1; a < 64; ++a) {
    if (!idx.is_in_subfield(a, 2)) continue;
    for (std::uint32_t b = 1; b < 64; ++b) {
      if (!idx.is_in_subfield(b, 3)) continue;
      bool expect = false;
      for (std::uint32_t v = 1; v < 64; ++v) {
        if (norm_to(idx, v, 2) == a && norm_to(idx, v, 3) == b && normal(v)) expect = true;
      }
      Prescription<std::uint32_t> P{D, {a, b}};
      const auto r = find_normal_prescribed(idx, fact, P);
      ASSERT_EQ(r.status == SearchStatus::kFound, expect);
      if (expect) {
        ++found;
        EXPECT_TRUE(normal(r.witness));
        EXPECT_EQ(norm_to(idx, r.witness, 2), a);
        EXPECT_EQ(norm_to(idx, r.witness, 3), b);
      }
    }
  }
  EXPECT_GT(found, 0);
}

TEST(FindNormal, F64OverF4AllNorms) {
  auto ctx = build_context(2, 2, 3);
  const IndexedField idx(ctx);
  const auto fact = factor_xn_minus_1(*ctx);
  for (std::uint32_t a = 1; a < 4; ++a) {
    Prescription<std::uint32_t> P{DivisorTuple::make(3, {1}), {a}};
    const auto r = find_normal_prescribed(idx, fact, P);
    ASSERT_EQ(r.status, SearchStatus::kFound);
    EXPECT_TRUE(is_normal_gcd(idx, r.witness));
    EXPECT_EQ(norm_to(idx, r.witness, 1), a);
  }
}

TEST(FindNormal, JobsGiveSameWitness) {
  auto ctx = build_context(2, 1, 16);
  const IndexedField idx(ctx, 1 << 17);
  const auto fact = factor_xn_minus_1(*ctx);
  Prescription<std::uint32_t> P{DivisorTuple::make(16, {8}), {idx.exp(257 * 5)}};
  SearchOptions one;
  SearchOptions four;
  four.jobs = 4;
  const auto a = find_normal_prescribed(idx, fact, P, one);
  const auto b = find_normal_prescribed(idx, fact, P, four);
  ASSERT_EQ(a.status, SearchStatus::kFound);
  EXPECT_EQ(a.j, b.j);
  EXPECT_EQ(a.witness, b.witness);
}

// Every norm tuple's fiber has the gcd size when
// admissible and is empty otherwise.
TEST(FiberCount, SmallFieldsExhaustive) {
  for (const auto& f : small_fields(1024, 2)) {
    auto ctx = build_context(f.p, f.s, f.n);
    const IndexedField idx(ctx);
    for (const auto& D : enumerate_tuples(f.n, 3)) {
      std::map<std::vector<std::uint32_t>, std::uint64_t> hist;
      for (std::uint32_t v = 1; v < f.size; ++v) {
        std::vector<std::uint32_t> key;
        for (std::uint64_t d : D.d) key.push_back(norm_to(idx, v, d));
        ++hist[key];
      }
      // All tuples in F*_D.
      std::vector<std::vector<std::uint32_t>> choices;
      for (std::uint64_t d : D.d) {
        std::vector<std::uint32_t> sub;
        for (std::uint32_t v = 1; v < f.size; ++v) {
          if (idx.is_in_subfield(v, d)) sub.push_back(v);
        }
        choices.push_back(sub);
      }
      std::vector<std::size_t> pos(D.k(), 0);
      const BigInt expect = fiber_count(f.q, D);
      for (;;) {
        Prescription<std::uint32_t> P{D, {}};
        for (std::size_t i = 0; i < D.k(); ++i) P.A.push_back(choices[i][pos[i]]);
        const bool adm = check_admissible(idx, P).admissible;
        const auto it = hist.find(P.A);
        const std::uint64_t count = it == hist.end() ? 0 : it->second;
        ASSERT_EQ(adm, count > 0);
        if (adm) ASSERT_EQ(BigInt(count), expect);
        std::size_t i = 0;
        while (i < D.k() && ++pos[i] == choices[i].size()) pos[i++] = 0;
        if (i == D.k()) break;
      }
    }
  }
}

}  // namespace
}  // namespace prenorm
