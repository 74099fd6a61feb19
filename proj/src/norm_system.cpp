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

#include "prenorm/norm_system.hpp"

#include <functional>

namespace prenorm {

DivisorTuple DivisorTuple::make(std::uint64_t n, std::vector<std::uint64_t> d, bool relaxed) {
  DivisorTuple out{n, std::move(d), relaxed};
  if (n == 0) throw Error(ErrorCode::kInvalidTuple, "n must be positive");
  if (out.d.empty()) throw Error(ErrorCode::kInvalidTuple, "empty divisor tuple");
  for (std::size_t i = 0; i < out.d.size(); ++i) {
    const std::uint64_t di = out.d[i];
    if (di == 0 || n % di != 0 || di >= n) {
      throw Error(ErrorCode::kInvalidTuple, std::to_string(di) + " is not a proper divisor of " + std::to_string(n));
    }
    if (i > 0 && di <= out.d[i - 1]) throw Error(ErrorCode::kInvalidTuple, "divisors must be strictly increasing");
  }
  if (!relaxed && !out.is_antichain()) {
    throw Error(ErrorCode::kInvalidTuple, "tuple " + out.to_string() + " has a divisor dividing another");
  }
  return out;
}

bool DivisorTuple::is_antichain() const {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) return false;
    }
  }
  return true;
}

std::string DivisorTuple::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  return out + ")";
}

std::vector<DivisorTuple> enumerate_gamma(std::uint64_t n, std::size_t k) {
  std::vector<std::uint64_t> proper;
  for (std::uint64_t d : divisors(n)) {
    if (d < n) proper.push_back(d);
  }
  std::vector<DivisorTuple> out;
  std::vector<std::uint64_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == k) {
      out.push_back(DivisorTuple{n, cur, false});
      return;
    }
    for (std::size_t i = from; i < proper.size(); ++i) {
      bool ok = true;
      for (std::uint64_t c : cur) ok = ok && proper[i] % c != 0;
      if (!ok) continue;
      cur.push_back(proper[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  if (k >= 1) rec(0);
  return out;
}

std::vector<DivisorTuple> enumerate_tuples(std::uint64_t n, std::size_t max_k) {
  std::vector<DivisorTuple> out;
  for (std::size_t k = 1; k <= max_k; ++k) {
    auto part = enumerate_gamma(n, k);
    if (part.empty()) break;
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

BigInt norm_exponent(std::uint64_t q, std::uint64_t n, std::uint64_t d) {
  if (d == 0 || n % d != 0) throw Error(ErrorCode::kNotADivisor, std::to_string(d) + " does not divide " + std::to_string(n));
  return (ipow(BigInt(q), n) - 1) / (ipow(BigInt(q), d) - 1);
}

BigInt fiber_count(std::uint64_t q, const DivisorTuple& D) {
  BigInt g = 0;
  for (std::uint64_t d : D.d) {
    const BigInt e = norm_exponent(q, D.n, d);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  }
  return g;
}

std::optional<BigInt> fiber_count_coprime(std::uint64_t q, const DivisorTuple& D) {
  for (std::size_t i = 0; i < D.d.size(); ++i) {
    for (std::size_t j = i + 1; j < D.d.size(); ++j) {
      if (gcd_u64(D.d[i], D.d[j]) != 1) return std::nullopt;
    }
  }
  BigInt num = (ipow(BigInt(q), D.n) - 1) * ipow(BigInt(q - 1), D.k() - 1);
  BigInt den = 1;
  for (std::uint64_t d : D.d) den *= ipow(BigInt(q), d) - 1;
  return BigInt(num / den);
}

CrtResult generalized_crt(const std::vector<BigInt>& residues, const std::vector<BigInt>& moduli) {
  CrtResult out;
  out.residue = 0;
  out.modulus = 1;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const BigInt& m2 = moduli[i];
    BigInt r2 = residues[i] % m2;
    if (r2 < 0) r2 += m2;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), out.modulus.get_mpz_t(), m2.get_mpz_t());
    BigInt diff = r2 - out.residue;
    if (diff % g != 0) {
      out.consistent = false;
      out.failed_at = i;
      return out;
    }
    // x = r1 + m1 * k with m1 k = diff (mod m2), i.e. (m1/g) k = diff/g (mod m2/g).
    const BigInt m1g = out.modulus / g;
    const BigInt m2g = m2 / g;
    BigInt inv = 0;
    if (m2g != 1) mpz_invert(inv.get_mpz_t(), m1g.get_mpz_t(), m2g.get_mpz_t());
    BigInt k = (diff / g) * inv % m2g;
    if (k < 0) k += m2g;
    const BigInt lcm = out.modulus * m2g;
    out.residue = (out.residue + out.modulus * k) % lcm;
    if (out.residue < 0) out.residue += lcm;
    out.modulus = lcm;
  }
  return out;
}

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound:
      return "Found";
    case SearchStatus::kNotFound:
      return "NotFound";
    case SearchStatus::kInconclusive:
      return "Inconclusive";
  }
  return "?";
}

}  // namespace prenorm
