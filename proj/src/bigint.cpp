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

#include "prenorm/bigint.hpp"

#include <algorithm>
#include <array>

#include "prenorm/error.hpp"

namespace prenorm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kDegreeZero: return "DegreeZero";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kContextMismatch: return "ContextMismatch";
    case ErrorCode::kNotADivisor: return "NotADivisor";
    case ErrorCode::kNotInSubfield: return "NotInSubfield";
    case ErrorCode::kBothZero: return "BothZero";
    case ErrorCode::kFactorizationTimeout: return "FactorizationTimeout";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNotAdmissible: return "NotAdmissible";
    case ErrorCode::kDiscreteLogBudget: return "DiscreteLogBudget";
    case ErrorCode::kInvalidTuple: return "InvalidTuple";
    case ErrorCode::kRoundingUnstable: return "RoundingUnstable";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigInt ipow(std::uint64_t base, std::uint64_t exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

std::uint64_t to_u64(const BigInt& value) {
  if (value < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64) {
    throw Error(ErrorCode::kInvalidArgument, "value " + value.get_str() + " exceeds 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    e >>= 1;
  }
  return result;
}

namespace {

constexpr std::array<unsigned long, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin(const BigInt& n) {
  BigInt d = n - 1;
  std::uint64_t r = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++r;
  }
  BigInt x;
  const BigInt n_minus_1 = n - 1;
  for (unsigned long a : kWitnesses) {
    if (n == a) return true;
    BigInt base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (std::uint64_t i = 1; i < r; ++i) {
      x = x * x % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Floyd cycle finding on x -> x^2 + 1 with batched gcds.
BigInt rho_split(const BigInt& n, std::uint64_t& iterations_left) {
  for (unsigned long start = 2;; ++start) {
    BigInt x = start;
    BigInt y = start;
    BigInt g = 1;
    BigInt product = 1;
    BigInt x_save = x;
    BigInt y_save = y;
    constexpr int kBatch = 64;
    while (g == 1) {
      x_save = x;
      y_save = y;
      for (int i = 0; i < kBatch; ++i) {
        if (iterations_left == 0) {
          throw Error(ErrorCode::kFactorizationTimeout, "rho budget exhausted on " + n.get_str());
        }
        --iterations_left;
        x = (x * x + 1) % n;
        y = (y * y + 1) % n;
        y = (y * y + 1) % n;
        BigInt diff = x - y;
        if (diff < 0) diff = -diff;
        product = product * diff % n;
      }
      mpz_gcd(g.get_mpz_t(), product.get_mpz_t(), n.get_mpz_t());
    }
    if (g == n) {
      // Replay the batch one step at a time.
      x = x_save;
      y = y_save;
      g = 1;
      for (int i = 0; i < kBatch && g == 1; ++i) {
        x = (x * x + 1) % n;
        y = (y * y + 1) % n;
        y = (y * y + 1) % n;
        BigInt diff = x - y;
        if (diff < 0) diff = -diff;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g != n && g != 1) return g;
  }
}

void factor_rec(const BigInt& n, std::vector<BigInt>& out, std::uint64_t& iterations_left) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  BigInt root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    factor_rec(root, out, iterations_left);
    factor_rec(root, out, iterations_left);
    return;
  }
  BigInt d = rho_split(n, iterations_left);
  factor_rec(d, out, iterations_left);
  factor_rec(BigInt(n / d), out, iterations_left);
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned long p : kWitnesses) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  static const BigInt kDeterministicBound("3317044064679887385961981");
  if (n < kDeterministicBound) return miller_rabin(n);
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool is_prime_u64(std::uint64_t n) { return is_prime(BigInt(std::to_string(n))); }

std::vector<BigInt> factor_integer(const BigInt& n, const FactorBudget& budget) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "factor_integer needs N >= 1");
  std::vector<BigInt> out;
  BigInt rest = n;
  for (unsigned long d = 2; d <= budget.trial_limit; d += (d == 2 ? 1 : 2)) {
    if (BigInt(d) * d > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      out.emplace_back(d);
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
    }
  }
  if (rest > 1) {
    std::uint64_t iterations_left = budget.rho_iterations;
    factor_rec(rest, out, iterations_left);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const BigInt& f : factor_integer(BigInt(std::to_string(n)))) {
    const std::uint64_t v = to_u64(f);
    if (out.empty() || out.back() != v) out.push_back(v);
  }
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p : distinct_prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::uint64_t multiplicative_order(const BigInt& q, std::uint64_t m) {
  if (m == 1) return 1;
  const std::uint64_t qm = to_u64(BigInt(q % BigInt(std::to_string(m))));
  if (gcd_u64(qm, m) != 1) throw Error(ErrorCode::kInvalidArgument, "order needs gcd(q, m) = 1");
  // ord divides phi(m); strip prime factors while q^(ord/r) stays 1.
  std::uint64_t order = euler_phi(m);
  for (std::uint64_t r : distinct_prime_factors(order)) {
    while (order % r == 0 && powmod_u64(qm, order / r, m) == 1) order /= r;
  }
  return order;
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  const auto primes = distinct_prime_factors(n);
  return primes.size() == 1;
}

}  // namespace prenorm
