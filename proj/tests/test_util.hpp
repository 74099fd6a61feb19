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

// Independent brute-force helpers shared by the unit tests. Nothing here
// calls into the library's factorization or normality code.

#ifndef PRENORM_TESTS_TEST_UTIL_HPP_
#define PRENORM_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <vector>

#include "prenorm/fq_poly.hpp"

namespace prenorm::testing {

struct FieldShape {
  std::uint32_t p;
  std::uint32_t s;
  std::uint32_t n;
  std::uint64_t q;
  std::uint64_t size;
};

inline bool naive_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

// Every (p, s, n) with p^{s n} <= limit, ordered by size.
inline std::vector<FieldShape> small_fields(std::uint64_t limit, std::uint32_t min_n = 1) {
  std::vector<FieldShape> out;
  for (std::uint32_t p = 2; p <= limit; ++p) {
    if (!naive_prime(p)) continue;
    std::uint64_t q = p;
    for (std::uint32_t s = 1; q <= limit; ++s, q *= p) {
      std::uint64_t size = q;
      for (std::uint32_t n = 1; size <= limit; ++n, size *= q) {
        if (n >= min_n) out.push_back({p, s, n, q, size});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const FieldShape& a, const FieldShape& b) { return a.size < b.size; });
  return out;
}

inline std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= limit; ++q) {
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    std::uint64_t v = q;
    while (v % p == 0) v /= p;
    if (v == 1) out.push_back(q);
  }
  return out;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-q digits of code.
inline FqPoly monic_from_code(std::uint64_t q, long degree, std::uint64_t code) {
  std::vector<Fq> c(static_cast<std::size_t>(degree) + 1, 0);
  for (long i = 0; i < degree; ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<Fq>(code % q);
    code /= q;
  }
  c[static_cast<std::size_t>(degree)] = 1;
  return FqPoly(std::move(c));
}

// Distinct irreducible factors of f (monic) by trial division with every
// monic polynomial of increasing degree.
inline std::vector<FqPoly> trial_factor_distinct(const BaseField& fq, FqPoly f) {
  std::vector<FqPoly> found;
  const std::uint64_t q = fq.q();
  for (long d = 1; 2 * d <= f.degree(); ++d) {
    std::uint64_t total = 1;
    for (long i = 0; i < d; ++i) total *= q;
    for (std::uint64_t code = 0; code < total && 2 * d <= f.degree(); ++code) {
      const FqPoly g = monic_from_code(q, d, code);
      bool divides = false;
      for (;;) {
        auto [quot, rem] = fq_divmod(fq, f, g);
        if (!rem.is_zero()) break;
        f = std::move(quot);
        divides = true;
      }
      if (divides) found.push_back(g);
    }
  }
  if (f.degree() >= 1) found.push_back(f);
  return found;
}

// Rank over F_q of the conjugates a, a^q, ..., a^{q^{n-1}} written as
// coordinate rows; a is normal iff the rank is n.
inline std::uint32_t conjugate_rank(const FieldContext& ctx, const Element& a) {
  const BaseField& fq = ctx.base();
  const std::uint32_t n = ctx.degree();
  std::vector<std::vector<Fq>> rows;
  Element c = a;
  for (std::uint32_t i = 0; i < n; ++i) {
    rows.emplace_back(c.coeffs().begin(), c.coeffs().end());
    c = ctx.pow(c, BigInt(ctx.q()));
  }
  std::uint32_t rank = 0;
  for (std::uint32_t col = 0; col < n && rank < n; ++col) {
    std::uint32_t pivot = rank;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[pivot], rows[rank]);
    const Fq inv = fq.inv(rows[rank][col]);
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Fq factor = fq.mul(rows[r][col], inv);
      for (std::uint32_t k = 0; k < n; ++k) rows[r][k] = fq.sub(rows[r][k], fq.mul(factor, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace prenorm::testing

#endif  // PRENORM_TESTS_TEST_UTIL_HPP_
