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

#include "prenorm/base_field.hpp"

#include <limits>

namespace prenorm {

namespace {

constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint64_t kMaxTabulatedQ = std::uint64_t{1} << 24;

}  // namespace

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of 0 in F_p");
  return static_cast<value_type>(powmod_u64(a, p_ - 2, p_));
}

BaseField::BaseField(std::uint32_t p, std::uint32_t s) : p_(p), s_(s), q_(1), prime_(p) {
  if (s == 0) throw Error(ErrorCode::kDegreeZero, "base field degree s must be >= 1");
  if (p < 2 || !is_prime_u64(p)) throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  for (std::uint32_t i = 0; i < s; ++i) {
    if (q_ > std::numeric_limits<std::uint32_t>::max() / p) {
      throw Error(ErrorCode::kInvalidArgument, "q = p^s must stay below 2^32");
    }
    q_ *= p;
  }
  if (s > 1 && q_ > kMaxTabulatedQ) {
    throw Error(ErrorCode::kInvalidArgument, "proper base extensions are limited to q <= 2^24");
  }
  auto nth = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
  modulus_ = least_irreducible(prime_, s, p, nth);
  if (s == 1) return;

  // Multiplication over F_p[t]/(m) is only needed to find a generator and
  // fill the tables.
  const PolyOf<PrimeField> mod(modulus_.begin(), modulus_.end());
  auto poly_of = [&](std::uint64_t code) {
    PolyOf<PrimeField> out;
    for (std::uint32_t i = 0; i < s; ++i) {
      out.push_back(static_cast<std::uint32_t>(code % p));
      code /= p;
    }
    poly_trim(prime_, out);
    return out;
  };
  auto code_of = [&](const PolyOf<PrimeField>& poly) {
    std::uint64_t code = 0;
    for (std::size_t i = poly.size(); i-- > 0;) code = code * p + poly[i];
    return static_cast<std::uint32_t>(code);
  };
  const std::uint64_t order = q_ - 1;
  const auto primes = distinct_prime_factors(order);
  PolyOf<PrimeField> generator;
  for (std::uint64_t code = 2; code < q_; ++code) {
    const auto cand = poly_of(code);
    bool primitive = true;
    for (std::uint64_t r : primes) {
      const auto t = poly_powmod(prime_, cand, BigInt(order / r), mod);
      if (t.size() == 1 && t[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = cand;
      break;
    }
  }
  exp_.resize(order);
  log_.assign(q_, kNoLog);
  PolyOf<PrimeField> cur{1};
  for (std::uint64_t k = 0; k < order; ++k) {
    const std::uint32_t code = code_of(cur);
    exp_[k] = code;
    log_[code] = static_cast<std::uint32_t>(k);
    cur = poly_mulmod(prime_, cur, generator, mod);
  }
  half_order_ = static_cast<std::uint32_t>(order / 2);
  if (p != 2) {
    // zech_[k] = log(1 + g^k); adding 1 bumps the lowest digit without carry.
    zech_.resize(order);
    for (std::uint64_t k = 0; k < order; ++k) {
      const std::uint32_t v = exp_[k];
      const std::uint32_t d0 = v % p;
      const std::uint32_t w = v - d0 + (d0 + 1) % p;
      zech_[k] = w == 0 ? kNoLog : log_[w];
    }
  }
}

Fq BaseField::zech_add(value_type a, value_type b) const noexcept {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t la = log_[a];
  const std::uint32_t lb = log_[b];
  const std::uint32_t diff = lb >= la ? lb - la : static_cast<std::uint32_t>(lb + (q_ - 1) - la);
  const std::uint32_t z = zech_[diff];
  if (z == kNoLog) return 0;
  return exp_[add_exponents(la, z)];
}

Fq BaseField::inv(value_type a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of 0 in F_q");
  if (s_ == 1) return prime_.inv(a);
  const std::uint32_t la = log_[a];
  return exp_[la == 0 ? 0 : static_cast<std::uint32_t>(q_ - 1 - la)];
}

Fq BaseField::pow(value_type a, std::uint64_t e) const {
  value_type result = one();
  while (e != 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Fq BaseField::from_integer(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Fq>(r);
}

std::vector<std::uint32_t> BaseField::digits(value_type a) const {
  std::vector<std::uint32_t> out(s_);
  for (std::uint32_t i = 0; i < s_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Fq BaseField::from_digits(std::span<const std::uint32_t> digits) const {
  std::uint64_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) code = code * p_ + digits[i];
  return static_cast<Fq>(code);
}

std::uint32_t BaseField::trace_to_prime(value_type a) const {
  value_type sum = 0;
  value_type conj = a;
  for (std::uint32_t j = 0; j < s_; ++j) {
    sum = add(sum, conj);
    conj = pow(conj, p_);
  }
  return sum;
}

}  // namespace prenorm
