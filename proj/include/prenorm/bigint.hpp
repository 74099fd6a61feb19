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

#ifndef PRENORM_BIGINT_HPP_
#define PRENORM_BIGINT_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace prenorm {

// Arbitrary-precision nonnegative exponents and counts (q^n - 1, Phi_q, ...).
using BigInt = mpz_class;

BigInt ipow(const BigInt& base, std::uint64_t exponent);
BigInt ipow(std::uint64_t base, std::uint64_t exponent);

// Throws kInvalidArgument when the value does not fit.
std::uint64_t to_u64(const BigInt& value);

std::string to_decimal(const BigInt& value);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m);

// Deterministic Miller-Rabin below 3.3e24 (first 13 prime bases); above that
// GMP's BPSW-backed test.
bool is_prime(const BigInt& n);
bool is_prime_u64(std::uint64_t n);

struct FactorBudget {
  std::uint64_t trial_limit = 1000000;
  std::uint64_t rho_iterations = 50000000;
};

// Complete factorization, prime factors ascending with multiplicity.
// Trial division up to the budget's limit, then Pollard rho with x^2 + 1
// from the fixed starting points 2, 3, 4, ...  Throws
// kFactorizationTimeout once the rho iteration budget is spent.
std::vector<BigInt> factor_integer(const BigInt& n, const FactorBudget& budget = {});

// Distinct prime factors of a 64-bit value, ascending.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

// Multiplicative order of q modulo m; requires gcd(q, m) = 1.
std::uint64_t multiplicative_order(const BigInt& q, std::uint64_t m);

bool is_prime_power(std::uint64_t n);

}  // namespace prenorm

#endif  // PRENORM_BIGINT_HPP_
