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

// Dense univariate polynomial routines shared by every coefficient field in
// the library: F_p (modulus search), F_q (divisors of x^n - 1) and F_{q^n}
// (the gcd normality criterion). Polynomials are coefficient vectors, least
// degree first, with no trailing zeros; the zero polynomial is empty.

#ifndef PRENORM_POLY_HPP_
#define PRENORM_POLY_HPP_

#include <concepts>
#include <cstddef>
#include <utility>
#include <vector>

#include "prenorm/bigint.hpp"
#include "prenorm/error.hpp"

namespace prenorm {

template <class R>
concept FieldOps = requires(const R& r, const typename R::value_type& a) {
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.sub(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.inv(a) } -> std::convertible_to<typename R::value_type>;
};

template <FieldOps R>
using PolyOf = std::vector<typename R::value_type>;

template <FieldOps R>
void poly_trim(const R& r, PolyOf<R>& a) {
  while (!a.empty() && r.is_zero(a.back())) a.pop_back();
}

template <class V>
long poly_degree(const std::vector<V>& a) {
  return static_cast<long>(a.size()) - 1;
}

template <FieldOps R>
PolyOf<R> poly_add(const R& r, const PolyOf<R>& a, const PolyOf<R>& b) {
  PolyOf<R> out(std::max(a.size(), b.size()), r.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = r.add(out[i], b[i]);
  poly_trim(r, out);
  return out;
}

template <FieldOps R>
PolyOf<R> poly_sub(const R& r, const PolyOf<R>& a, const PolyOf<R>& b) {
  PolyOf<R> out(std::max(a.size(), b.size()), r.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = r.sub(out[i], b[i]);
  poly_trim(r, out);
  return out;
}

template <FieldOps R>
PolyOf<R> poly_mul(const R& r, const PolyOf<R>& a, const PolyOf<R>& b) {
  if (a.empty() || b.empty()) return {};
  PolyOf<R> out(a.size() + b.size() - 1, r.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (r.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = r.add(out[i + j], r.mul(a[i], b[j]));
    }
  }
  poly_trim(r, out);
  return out;
}

template <FieldOps R>
PolyOf<R> poly_scale(const R& r, const PolyOf<R>& a, const typename R::value_type& c) {
  PolyOf<R> out;
  out.reserve(a.size());
  for (const auto& v : a) out.push_back(r.mul(v, c));
  poly_trim(r, out);
  return out;
}

// Quotient and remainder; b must be nonzero.
template <FieldOps R>
std::pair<PolyOf<R>, PolyOf<R>> poly_divmod(const R& r, const PolyOf<R>& a, const PolyOf<R>& b) {
  if (b.empty()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  PolyOf<R> rem = a;
  poly_trim(r, rem);
  if (rem.size() < b.size()) return {PolyOf<R>{}, rem};
  const auto lead_inv = r.inv(b.back());
  PolyOf<R> quot(rem.size() - b.size() + 1, r.zero());
  for (std::size_t k = quot.size(); k-- > 0;) {
    const auto coef = r.mul(rem[k + b.size() - 1], lead_inv);
    quot[k] = coef;
    if (r.is_zero(coef)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      rem[k + j] = r.sub(rem[k + j], r.mul(coef, b[j]));
    }
  }
  poly_trim(r, rem);
  poly_trim(r, quot);
  return {std::move(quot), std::move(rem)};
}

template <FieldOps R>
PolyOf<R> poly_mod(const R& r, const PolyOf<R>& a, const PolyOf<R>& m) {
  return poly_divmod(r, a, m).second;
}

template <FieldOps R>
PolyOf<R> poly_monic(const R& r, const PolyOf<R>& a) {
  if (a.empty()) return a;
  return poly_scale(r, a, r.inv(a.back()));
}

// Monic gcd by Euclid. gcd(f, 0) = monic(f).
template <FieldOps R>
PolyOf<R> poly_gcd(const R& r, PolyOf<R> a, PolyOf<R> b) {
  poly_trim(r, a);
  poly_trim(r, b);
  if (a.empty() && b.empty()) throw Error(ErrorCode::kBothZero, "gcd(0, 0) is undefined");
  while (!b.empty()) {
    PolyOf<R> rem = poly_mod(r, a, b);
    a = std::move(b);
    b = std::move(rem);
  }
  return poly_monic(r, a);
}

template <FieldOps R>
PolyOf<R> poly_mulmod(const R& r, const PolyOf<R>& a, const PolyOf<R>& b, const PolyOf<R>& m) {
  return poly_mod(r, poly_mul(r, a, b), m);
}

template <FieldOps R>
PolyOf<R> poly_powmod(const R& r, PolyOf<R> base, const BigInt& e, const PolyOf<R>& m) {
  PolyOf<R> result = poly_mod(r, PolyOf<R>{r.one()}, m);
  base = poly_mod(r, base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = poly_mulmod(r, result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = poly_mulmod(r, result, base, m);
  }
  return result;
}

// Inverse of a modulo m, assuming gcd(a, m) = 1 (extended Euclid).
template <FieldOps R>
PolyOf<R> poly_inverse_mod(const R& r, const PolyOf<R>& a, const PolyOf<R>& m) {
  PolyOf<R> old_r = poly_mod(r, a, m);
  PolyOf<R> cur_r = m;
  PolyOf<R> old_s{r.one()};
  PolyOf<R> cur_s;
  if (old_r.empty()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  while (!cur_r.empty()) {
    auto [quot, rem] = poly_divmod(r, old_r, cur_r);
    PolyOf<R> next_s = poly_sub(r, old_s, poly_mul(r, quot, cur_s));
    old_r = std::move(cur_r);
    cur_r = std::move(rem);
    old_s = std::move(cur_s);
    cur_s = std::move(next_s);
  }
  if (old_r.size() != 1) throw Error(ErrorCode::kDivisionByZero, "element is not invertible");
  return poly_mod(r, poly_scale(r, old_s, r.inv(old_r[0])), m);
}

// Ben-Or test: f of degree d is irreducible over a field of size q iff
// gcd(x^{q^i} - x, f) = 1 for 1 <= i <= d/2.
template <FieldOps R>
bool poly_is_irreducible(const R& r, const PolyOf<R>& f, const BigInt& field_size) {
  const long d = poly_degree(f);
  if (d < 1) return false;
  if (d == 1) return true;
  const PolyOf<R> x{r.zero(), r.one()};
  PolyOf<R> h = poly_mod(r, x, f);
  for (long i = 1; i <= d / 2; ++i) {
    h = poly_powmod(r, h, field_size, f);
    const PolyOf<R> g = poly_gcd(r, poly_sub(r, h, x), f);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace prenorm

#endif  // PRENORM_POLY_HPP_
