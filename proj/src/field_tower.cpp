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

#include "prenorm/field_tower.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "prenorm/poly.hpp"
#include "prenorm/text.hpp"

namespace prenorm {

PrimePower PrimePower::make(std::uint64_t p, std::uint64_t s) {
  if (s == 0) throw Error(ErrorCode::kDegreeZero, "s must be >= 1");
  if (p < 2 || p > std::numeric_limits<std::uint32_t>::max() || !is_prime_u64(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not a prime");
  }
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < s; ++i) {
    if (q > std::numeric_limits<std::uint32_t>::max() / p) {
      throw Error(ErrorCode::kInvalidArgument, "q = p^s must stay below 2^32");
    }
    q *= p;
  }
  return PrimePower{static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(s), q};
}

PrimePower PrimePower::from_q(std::uint64_t q) {
  if (q < 2) throw Error(ErrorCode::kNotPrime, "q must be a prime power >= 2");
  const auto primes = distinct_prime_factors(q);
  if (primes.size() != 1) throw Error(ErrorCode::kNotPrime, std::to_string(q) + " is not a prime power");
  std::uint64_t s = 0;
  for (std::uint64_t v = q; v > 1; v /= primes[0]) ++s;
  return make(primes[0], s);
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Fq c : e.coeffs()) h = (h ^ c) * 1099511628211ull;
  return h;
}

FieldContext::FieldContext(PrimePower base, std::uint32_t n) : base_(base), n_(n), fq_(base.p, base.s) {
  if (n == 0) throw Error(ErrorCode::kDegreeZero, "n must be >= 1");
  modulus_ = least_irreducible(fq_, n, base_.q, [](std::uint64_t v) { return static_cast<Fq>(v); });
  size_ = ipow(base_.q, n_);
  group_order_ = size_ - 1;

  const PolyOf<BaseField> mod(modulus_.begin(), modulus_.end());
  const PolyOf<BaseField> x_q = poly_powmod(fq_, PolyOf<BaseField>{0, 1}, BigInt(base_.q), mod);
  PolyOf<BaseField> image{1};
  frobenius_images_.reserve(n_);
  for (std::uint32_t j = 0; j < n_; ++j) {
    std::vector<Fq> padded(n_, 0);
    std::copy(image.begin(), image.end(), padded.begin());
    frobenius_images_.push_back(std::move(padded));
    image = poly_mulmod(fq_, image, x_q, mod);
  }
}

Element FieldContext::embed(Fq c) const {
  std::vector<Fq> coeffs(n_, 0);
  coeffs[0] = c;
  return Element(std::move(coeffs));
}

Element FieldContext::basis(std::uint32_t j) const {
  if (j >= n_) throw Error(ErrorCode::kInvalidArgument, "basis index out of range");
  std::vector<Fq> coeffs(n_, 0);
  coeffs[j] = 1;
  return Element(std::move(coeffs));
}

Element FieldContext::from_index(const BigInt& index) const {
  if (index < 0 || index >= size_) throw Error(ErrorCode::kInvalidArgument, "element index out of range");
  std::vector<Fq> coeffs(n_, 0);
  BigInt rest = index;
  BigInt digit;
  for (std::uint32_t i = 0; i < n_; ++i) {
    mpz_fdiv_qr_ui(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), base_.q);
    coeffs[i] = static_cast<Fq>(digit.get_ui());
  }
  return Element(std::move(coeffs));
}

BigInt FieldContext::to_index(const Element& a) const {
  check(a);
  BigInt index = 0;
  for (std::size_t i = n_; i-- > 0;) index = index * base_.q + a[i];
  return index;
}

void FieldContext::check(const Element& a) const {
  if (a.size() != n_) {
    throw Error(ErrorCode::kContextMismatch,
                "element has " + std::to_string(a.size()) + " coefficients, field degree is " + std::to_string(n_));
  }
  for (Fq c : a.coeffs()) {
    if (c >= base_.q) throw Error(ErrorCode::kContextMismatch, "coefficient outside F_q");
  }
}

bool FieldContext::is_zero(const Element& a) const {
  return std::all_of(a.coeffs().begin(), a.coeffs().end(), [](Fq c) { return c == 0; });
}

Element FieldContext::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  std::vector<Fq> out(n_);
  for (std::uint32_t i = 0; i < n_; ++i) out[i] = fq_.add(a[i], b[i]);
  return Element(std::move(out));
}

Element FieldContext::sub(const Element& a, const Element& b) const {
  check(a);
  check(b);
  std::vector<Fq> out(n_);
  for (std::uint32_t i = 0; i < n_; ++i) out[i] = fq_.sub(a[i], b[i]);
  return Element(std::move(out));
}

Element FieldContext::neg(const Element& a) const {
  check(a);
  std::vector<Fq> out(n_);
  for (std::uint32_t i = 0; i < n_; ++i) out[i] = fq_.neg(a[i]);
  return Element(std::move(out));
}

std::vector<Fq> FieldContext::reduce(std::vector<Fq> wide) const {
  for (std::size_t k = wide.size(); k-- > n_;) {
    const Fq c = wide[k];
    if (c == 0) continue;
    for (std::uint32_t j = 0; j < n_; ++j) {
      wide[k - n_ + j] = fq_.sub(wide[k - n_ + j], fq_.mul(c, modulus_[j]));
    }
  }
  wide.resize(n_);
  return wide;
}

Element FieldContext::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  std::vector<Fq> wide(2 * n_ - 1, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < n_; ++j) {
      if (b[j] == 0) continue;
      wide[i + j] = fq_.add(wide[i + j], fq_.mul(a[i], b[j]));
    }
  }
  return Element(reduce(std::move(wide)));
}

Element FieldContext::inv(const Element& a) const {
  check(a);
  if (is_zero(a)) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  PolyOf<BaseField> poly(a.coeffs().begin(), a.coeffs().end());
  poly_trim(fq_, poly);
  const PolyOf<BaseField> mod(modulus_.begin(), modulus_.end());
  PolyOf<BaseField> inverse = poly_inverse_mod(fq_, poly, mod);
  inverse.resize(n_, 0);
  return Element(std::move(inverse));
}

Element FieldContext::div(const Element& a, const Element& b) const {
  if (is_zero(b)) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  return mul(a, inv(b));
}

Element FieldContext::scale(Fq c, const Element& a) const {
  check(a);
  std::vector<Fq> out(n_);
  for (std::uint32_t i = 0; i < n_; ++i) out[i] = fq_.mul(c, a[i]);
  return Element(std::move(out));
}

Element FieldContext::pow(const Element& a, const BigInt& e) const {
  check(a);
  if (e < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
  Element result = one();
  const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
  }
  return result;
}

Element FieldContext::apply_frobenius_once(const Element& a) const {
  std::vector<Fq> out(n_, 0);
  for (std::uint32_t j = 0; j < n_; ++j) {
    if (a[j] == 0) continue;
    const auto& image = frobenius_images_[j];
    for (std::uint32_t i = 0; i < n_; ++i) out[i] = fq_.add(out[i], fq_.mul(a[j], image[i]));
  }
  return Element(std::move(out));
}

Element FieldContext::frobenius(const Element& a, std::uint64_t i) const {
  check(a);
  Element out = a;
  for (std::uint64_t k = 0; k < i % n_; ++k) out = apply_frobenius_once(out);
  return out;
}

bool FieldContext::is_in_subfield(const Element& a, std::uint64_t d) const {
  if (d == 0 || n_ % d != 0) {
    throw Error(ErrorCode::kNotADivisor, std::to_string(d) + " does not divide " + std::to_string(n_));
  }
  return frobenius(a, d) == a;
}

Fq FieldContext::rel_trace(const Element& a) const {
  check(a);
  Element sum = zero();
  Element conj = a;
  for (std::uint32_t i = 0; i < n_; ++i) {
    sum = add(sum, conj);
    conj = apply_frobenius_once(conj);
  }
  return sum[0];
}

std::uint32_t FieldContext::abs_trace(const Element& a) const { return fq_.trace_to_prime(rel_trace(a)); }

const std::vector<BigInt>& FieldContext::group_order_factors() const {
  std::call_once(factors_once_, [this] { factors_ = factor_integer(group_order_); });
  return factors_;
}

std::vector<BigInt> FieldContext::group_order_primes() const {
  std::vector<BigInt> primes = group_order_factors();
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

const Element& FieldContext::canonical_primitive() const {
  std::call_once(theta_once_, [this] {
    const auto primes = group_order_primes();
    std::vector<BigInt> cofactors;
    for (const BigInt& r : primes) cofactors.emplace_back(group_order_ / r);
    const Element unit = one();
    for (BigInt index = 1; index < size_; ++index) {
      const Element cand = from_index(index);
      bool primitive = true;
      for (const BigInt& e : cofactors) {
        if (pow(cand, e) == unit) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        theta_ = cand;
        return;
      }
    }
    throw Error(ErrorCode::kInvalidArgument, "no primitive element found");
  });
  return theta_;
}

std::string FieldContext::shape() const {
  return std::to_string(base_.p) + "^" + std::to_string(base_.s) + "^" + std::to_string(n_);
}

std::shared_ptr<const FieldContext> build_context(std::uint64_t p, std::uint64_t s, std::uint64_t n) {
  if (s == 0 || n == 0) throw Error(ErrorCode::kDegreeZero, "s and n must be >= 1");
  if (n > std::numeric_limits<std::uint32_t>::max()) throw Error(ErrorCode::kInvalidArgument, "n too large");
  return std::make_shared<const FieldContext>(PrimePower::make(p, s), static_cast<std::uint32_t>(n));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

BigInt uniform_below(std::mt19937_64& rng, const BigInt& bound) {
  if (bound <= 0) throw Error(ErrorCode::kInvalidArgument, "empty range");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  for (;;) {
    BigInt v = 0;
    std::size_t filled = 0;
    while (filled < bits) {
      const std::size_t take = std::min<std::size_t>(64, bits - filled);
      std::uint64_t chunk = rng();
      if (take < 64) chunk &= (std::uint64_t{1} << take) - 1;
      BigInt part(chunk);
      v += part << filled;
      filled += take;
    }
    if (v < bound) return v;
  }
}

Element random_element(const FieldContext& ctx, std::mt19937_64& rng) {
  std::vector<Fq> coeffs(ctx.degree());
  for (auto& c : coeffs) c = static_cast<Fq>(uniform_below(rng, ctx.q()));
  return Element(std::move(coeffs));
}

std::string format_fq(const BaseField& fq, Fq c) {
  std::string out = "[";
  const auto digits = fq.digits(c);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(digits[i]);
  }
  return out + "]";
}

std::string format_element(const FieldContext& ctx, const Element& a) {
  ctx.check(a);
  std::string out = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += format_fq(ctx.base(), a[i]);
  }
  return out + "]";
}

Fq parse_fq(const BaseField& fq, std::string_view raw) {
  const std::string text = strip_spaces(raw);
  if (!text.empty() && text.front() == '[') {
    const auto parts = split_top_level(unbracket(text));
    if (parts.size() != fq.s()) throw Error(ErrorCode::kParse, "F_q value needs " + std::to_string(fq.s()) + " digits");
    std::vector<std::uint32_t> digits;
    for (const auto& part : parts) {
      const long long d = parse_int(part);
      if (d < 0 || d >= fq.p()) throw Error(ErrorCode::kParse, "digit out of range in '" + text + "'");
      digits.push_back(static_cast<std::uint32_t>(d));
    }
    return fq.from_digits(digits);
  }
  return fq.from_integer(parse_int(text));
}

Element parse_element(const FieldContext& ctx, std::string_view raw) {
  const std::string text = strip_spaces(raw);
  if (text.empty()) throw Error(ErrorCode::kParse, "empty element literal");
  if (text[0] == 'g') {
    BigInt k = 1;
    if (text.size() > 1) {
      if (text.size() < 3 || text[1] != '^') throw Error(ErrorCode::kParse, "expected g^k, got '" + text + "'");
      if (k.set_str(text.substr(2), 10) != 0 || k < 0) throw Error(ErrorCode::kParse, "bad exponent in '" + text + "'");
    }
    return ctx.pow(ctx.canonical_primitive(), k);
  }
  if (text[0] == '[') {
    const auto parts = split_top_level(unbracket(text));
    if (parts.size() != ctx.degree()) {
      throw Error(ErrorCode::kParse, "element needs " + std::to_string(ctx.degree()) + " coefficients");
    }
    std::vector<Fq> coeffs;
    for (const auto& part : parts) coeffs.push_back(parse_fq(ctx.base(), part));
    return Element(std::move(coeffs));
  }
  return ctx.embed(ctx.base().from_integer(parse_int(text)));
}

}  // namespace prenorm
