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

#include "prenorm/fq_poly.hpp"

#include <algorithm>

#include "prenorm/poly.hpp"
#include "prenorm/text.hpp"

namespace prenorm {

FqPoly::FqPoly(std::vector<Fq> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FqPoly FqPoly::monomial(std::size_t k) {
  std::vector<Fq> c(k + 1, 0);
  c[k] = 1;
  return FqPoly(std::move(c));
}

FqPoly fq_add(const BaseField& fq, const FqPoly& a, const FqPoly& b) { return FqPoly(poly_add(fq, a.vec(), b.vec())); }
FqPoly fq_sub(const BaseField& fq, const FqPoly& a, const FqPoly& b) { return FqPoly(poly_sub(fq, a.vec(), b.vec())); }
FqPoly fq_mul(const BaseField& fq, const FqPoly& a, const FqPoly& b) { return FqPoly(poly_mul(fq, a.vec(), b.vec())); }

std::pair<FqPoly, FqPoly> fq_divmod(const BaseField& fq, const FqPoly& a, const FqPoly& b) {
  auto [quot, rem] = poly_divmod(fq, a.vec(), b.vec());
  return {FqPoly(std::move(quot)), FqPoly(std::move(rem))};
}

FqPoly fq_gcd(const BaseField& fq, const FqPoly& a, const FqPoly& b) { return FqPoly(poly_gcd(fq, a.vec(), b.vec())); }

FqPoly xn_minus_one(const BaseField& fq, std::uint64_t n) {
  std::vector<Fq> c(n + 1, 0);
  c[0] = fq.neg(1);
  c[n] = fq.add(c[n], 1);
  return FqPoly(std::move(c));
}

std::string format_poly(const BaseField& fq, const FqPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ',';
    out += format_fq(fq, f[i]);
  }
  return out;
}

FqPoly parse_poly(const BaseField& fq, std::string_view text) {
  const std::string stripped = strip_spaces(text);
  if (stripped.empty()) throw Error(ErrorCode::kParse, "empty polynomial literal");
  std::vector<Fq> coeffs;
  for (const auto& part : split_top_level(stripped)) coeffs.push_back(parse_fq(fq, part));
  return FqPoly(std::move(coeffs));
}

namespace {

// F_q value as a polynomial in t over F_p.
std::string pretty_fq(const BaseField& fq, Fq c) {
  if (fq.s() == 1) return std::to_string(c);
  const auto digits = fq.digits(c);
  std::string out;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] == 0) continue;
    if (!out.empty()) out += '+';
    const bool show_coeff = digits[i] != 1 || i == 0;
    if (show_coeff) out += std::to_string(digits[i]);
    if (i >= 1) out += 't';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string pretty_poly(const BaseField& fq, const FqPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (long i = f.degree(); i >= 0; --i) {
    const Fq c = f[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    std::string coeff = pretty_fq(fq, c);
    if (i == 0) {
      out += coeff;
      continue;
    }
    if (c != 1) out += coeff.find('+') == std::string::npos ? coeff : "(" + coeff + ")";
    out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

XnShape xn_shape(std::uint64_t q, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kDegreeZero, "n must be >= 1");
  const PrimePower pp = PrimePower::from_q(q);
  XnShape shape;
  shape.q = q;
  shape.n = n;
  shape.m = n;
  while (shape.m % pp.p == 0) {
    shape.m /= pp.p;
    ++shape.t;
    shape.multiplicity *= pp.p;
  }
  for (std::uint64_t d : divisors(shape.m)) {
    const std::uint64_t ord = d == 1 ? 1 : multiplicative_order(BigInt(q), d);
    const std::uint64_t count = euler_phi(d) / ord;
    shape.pieces.push_back({d, ord, count});
    shape.distinct += count;
  }
  return shape;
}

BigInt w_exact(const XnShape& shape) { return ipow(BigInt(2), shape.distinct); }

XnFactorization::XnFactorization(const BaseField& fq, XnShape shape, std::vector<FqPoly> irreducibles)
    : fq_(&fq), shape_(std::move(shape)), irreducibles_(std::move(irreducibles)) {}

FqPoly XnFactorization::expand(const DivisorExponents& e) const {
  FqPoly out = FqPoly::constant(1);
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::uint32_t k = 0; k < e[i]; ++k) out = fq_mul(*fq_, out, irreducibles_[i]);
  }
  return out;
}

long XnFactorization::degree_of(const DivisorExponents& e) const {
  long deg = 0;
  for (std::size_t i = 0; i < e.size(); ++i) deg += static_cast<long>(e[i]) * irreducibles_[i].degree();
  return deg;
}

DivisorExponents XnFactorization::exponents_of(const FqPoly& f) const {
  if (!f.is_monic()) throw Error(ErrorCode::kNotADivisor, "divisor must be monic");
  DivisorExponents e = unit();
  FqPoly rest = f;
  for (std::size_t i = 0; i < irreducibles_.size(); ++i) {
    while (e[i] < shape_.multiplicity) {
      auto [quot, rem] = fq_divmod(*fq_, rest, irreducibles_[i]);
      if (!rem.is_zero()) break;
      rest = std::move(quot);
      ++e[i];
    }
  }
  if (rest.degree() != 0) throw Error(ErrorCode::kNotADivisor, "polynomial does not divide x^n - 1");
  return e;
}

void XnFactorization::for_each_divisor(const std::function<void(const DivisorExponents&)>& visit) const {
  DivisorExponents e = unit();
  for (;;) {
    visit(e);
    std::size_t pos = e.size();
    while (pos-- > 0) {
      if (e[pos] < shape_.multiplicity) {
        ++e[pos];
        break;
      }
      e[pos] = 0;
    }
    if (pos == static_cast<std::size_t>(-1)) return;
  }
}

std::uint64_t XnFactorization::divisor_count() const {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < irreducibles_.size(); ++i) count *= shape_.multiplicity + 1;
  return count;
}

namespace {

bool canonical_less(const FqPoly& a, const FqPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (long i = a.degree(); i >= 0; --i) {
    const auto k = static_cast<std::size_t>(i);
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

std::vector<FqPoly> split_x_m_minus_1(const BaseField& fq, const PrimePower& pp, std::uint64_t m) {
  if (m == 1) return {FqPoly({fq.neg(1), 1})};
  const std::uint64_t k = multiplicative_order(BigInt(pp.q), m);
  const FieldContext ext(pp, static_cast<std::uint32_t>(k));
  const BigInt cofactor = ext.group_order() / BigInt(m);
  const auto primes = distinct_prime_factors(m);
  const Element unit = ext.one();
  Element zeta;
  for (BigInt index = 2;; ++index) {
    if (index >= ext.size()) throw Error(ErrorCode::kInvalidArgument, "no root of unity found");
    const Element z = ext.pow(ext.from_index(index), cofactor);
    bool exact = true;
    for (std::uint64_t r : primes) {
      if (ext.pow(z, BigInt(m / r)) == unit) {
        exact = false;
        break;
      }
    }
    if (exact) {
      zeta = z;
      break;
    }
  }
  std::vector<Element> powers{unit};
  for (std::uint64_t c = 1; c < m; ++c) powers.push_back(ext.mul(powers.back(), zeta));

  std::vector<FqPoly> factors;
  std::vector<bool> seen(m, false);
  for (std::uint64_t c = 0; c < m; ++c) {
    if (seen[c]) continue;
    PolyOf<FieldContext> prod{unit};
    std::uint64_t j = c;
    do {
      seen[j] = true;
      prod = poly_mul(ext, prod, PolyOf<FieldContext>{ext.neg(powers[j]), unit});
      j = mulmod_u64(j, pp.q, m);
    } while (j != c);
    std::vector<Fq> coeffs;
    for (const Element& e : prod) {
      for (std::size_t i = 1; i < e.size(); ++i) {
        if (e[i] != 0) throw Error(ErrorCode::kInvalidArgument, "cyclotomic factor left the base field");
      }
      coeffs.push_back(e[0]);
    }
    factors.emplace_back(std::move(coeffs));
  }
  std::sort(factors.begin(), factors.end(), canonical_less);
  return factors;
}

}  // namespace

XnFactorization factor_xn_minus_1(const FieldContext& ctx) {
  XnShape shape = xn_shape(ctx.q(), ctx.degree());
  auto irreducibles = split_x_m_minus_1(ctx.base(), ctx.prime_power(), shape.m);
  return XnFactorization(ctx.base(), std::move(shape), std::move(irreducibles));
}

ArithValues arith_functions(const XnFactorization& fact, const DivisorExponents& e) {
  if (e.size() != fact.distinct_count()) throw Error(ErrorCode::kNotADivisor, "exponent vector has wrong length");
  ArithValues out;
  out.phi = 1;
  int factors = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (e[i] > fact.multiplicity()) throw Error(ErrorCode::kNotADivisor, "exponent exceeds multiplicity");
    const auto deg = static_cast<std::uint64_t>(fact.irreducibles()[i].degree());
    out.phi *= ipow(BigInt(fact.q()), e[i] * deg) - ipow(BigInt(fact.q()), (e[i] - 1) * deg);
    ++factors;
    if (e[i] > 1) out.squarefree = false;
  }
  out.mu = !out.squarefree ? 0 : (factors % 2 == 0 ? 1 : -1);
  return out;
}

ArithValues arith_functions(const XnFactorization& fact, const FqPoly& f) {
  return arith_functions(fact, fact.exponents_of(f));
}

BigInt w_exact(const XnFactorization& fact) { return ipow(BigInt(2), fact.distinct_count()); }

DivisorExponents peel_order(const XnFactorization& fact,
                            const std::function<bool(const DivisorExponents&)>& annihilates) {
  DivisorExponents g = fact.full();
  for (std::size_t i = 0; i < g.size(); ++i) {
    while (g[i] > 0) {
      --g[i];
      if (!annihilates(g)) {
        ++g[i];
        break;
      }
    }
  }
  return g;
}

}  // namespace prenorm
