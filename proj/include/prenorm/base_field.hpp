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

#ifndef PRENORM_BASE_FIELD_HPP_
#define PRENORM_BASE_FIELD_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "prenorm/poly.hpp"

namespace prenorm {

// An F_q value: the base-p digits of its coordinate vector over F_p, packed
// least significant first. Numeric order of codes is the canonical order.
using Fq = std::uint32_t;

class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {}

  std::uint32_t p() const noexcept { return p_; }
  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1 % p_; }
  bool is_zero(value_type a) const noexcept { return a == 0; }
  value_type add(value_type a, value_type b) const noexcept {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type inv(value_type a) const;

 private:
  std::uint32_t p_;
};

// F_q = F_p[t]/(m(t)) with m the least monic irreducible of degree s that has
// a nonzero constant term. Prime fields (s = 1) use plain modular arithmetic;
// proper extensions use log/antilog tables with Zech logarithms for addition.
class BaseField {
 public:
  using value_type = Fq;

  BaseField(std::uint32_t p, std::uint32_t s);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t s() const noexcept { return s_; }
  std::uint64_t q() const noexcept { return q_; }
  // Monic modulus over F_p, least degree first (length s + 1).
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  bool is_zero(value_type a) const noexcept { return a == 0; }

  value_type add(value_type a, value_type b) const noexcept {
    if (s_ == 1) return prime_.add(a, b);
    if (p_ == 2) return a ^ b;
    return zech_add(a, b);
  }
  value_type neg(value_type a) const noexcept {
    if (s_ == 1) return prime_.neg(a);
    if (p_ == 2 || a == 0) return a;
    return exp_[add_exponents(log_[a], half_order_)];
  }
  value_type sub(value_type a, value_type b) const noexcept { return add(a, neg(b)); }
  value_type mul(value_type a, value_type b) const noexcept {
    if (s_ == 1) return prime_.mul(a, b);
    if (a == 0 || b == 0) return 0;
    return exp_[add_exponents(log_[a], log_[b])];
  }
  value_type inv(value_type a) const;
  value_type pow(value_type a, std::uint64_t e) const;

  // Embeds an integer as an element of the prime subfield.
  value_type from_integer(long long v) const noexcept;

  std::vector<std::uint32_t> digits(value_type a) const;
  value_type from_digits(std::span<const std::uint32_t> digits) const;

  // Tr_{F_q/F_p}(a), returned as a digit in [0, p).
  std::uint32_t trace_to_prime(value_type a) const;

 private:
  std::uint32_t add_exponents(std::uint32_t x, std::uint32_t y) const noexcept {
    const std::uint64_t s = std::uint64_t{x} + y;
    return static_cast<std::uint32_t>(s >= q_ - 1 ? s - (q_ - 1) : s);
  }
  value_type zech_add(value_type a, value_type b) const noexcept;

  std::uint32_t p_;
  std::uint32_t s_;
  std::uint64_t q_;
  PrimeField prime_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;
  std::uint32_t half_order_ = 0;
};

// Least monic irreducible of the given degree over the field r of size
// field_size, skipping x itself; coefficients compared most significant first.
template <FieldOps R>
PolyOf<R> least_irreducible(const R& r, std::uint32_t degree, std::uint64_t field_size,
                            auto&& nth_element) {
  PolyOf<R> f(degree + 1, r.zero());
  f[degree] = r.one();
  const BigInt size(field_size);
  // Enumerate the lower coefficients as a base-field_size counter; the
  // counter order is lexicographic with the x^{degree-1} coefficient leading.
  std::vector<std::uint64_t> counter(degree, 0);
  for (;;) {
    bool zero_constant = counter.empty() || counter[0] == 0;
    if (!zero_constant || degree == 0) {
      for (std::uint32_t i = 0; i < degree; ++i) f[i] = nth_element(counter[i]);
      if (poly_is_irreducible(r, f, size)) return f;
    }
    std::uint32_t pos = 0;
    while (pos < degree && ++counter[pos] == field_size) counter[pos++] = 0;
    if (pos == degree) break;
  }
  throw Error(ErrorCode::kInvalidArgument, "no irreducible polynomial found");
}

}  // namespace prenorm

#endif  // PRENORM_BASE_FIELD_HPP_
