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

#ifndef PRENORM_FQ_POLY_HPP_
#define PRENORM_FQ_POLY_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prenorm/field_tower.hpp"

namespace prenorm {

// Polynomial over F_q, least degree first, no trailing zeros.
class FqPoly {
 public:
  FqPoly() = default;
  explicit FqPoly(std::vector<Fq> coeffs);
  static FqPoly constant(Fq c) { return FqPoly(std::vector<Fq>{c}); }
  static FqPoly monomial(std::size_t k);

  std::span<const Fq> coeffs() const noexcept { return coeffs_; }
  const std::vector<Fq>& vec() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  Fq operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

  friend bool operator==(const FqPoly&, const FqPoly&) = default;

 private:
  std::vector<Fq> coeffs_;
};

FqPoly fq_add(const BaseField& fq, const FqPoly& a, const FqPoly& b);
FqPoly fq_sub(const BaseField& fq, const FqPoly& a, const FqPoly& b);
FqPoly fq_mul(const BaseField& fq, const FqPoly& a, const FqPoly& b);
std::pair<FqPoly, FqPoly> fq_divmod(const BaseField& fq, const FqPoly& a, const FqPoly& b);
// Monic gcd; kBothZero when both inputs vanish.
FqPoly fq_gcd(const BaseField& fq, const FqPoly& a, const FqPoly& b);
FqPoly xn_minus_one(const BaseField& fq, std::uint64_t n);

// Comma-separated coefficients, least degree first, each in the F_q inner
// element syntax: "1,0,1" or "[1,0],[0,1]".
std::string format_poly(const BaseField& fq, const FqPoly& f);
FqPoly parse_poly(const BaseField& fq, std::string_view text);
// Human-readable form such as "x^2+x+1"; F_q coefficients in digit form.
std::string pretty_poly(const BaseField& fq, const FqPoly& f);

// Counts describing x^n - 1 = (x^m - 1)^{p^t} with gcd(m, p) = 1. Cheap for
// any n; needs no field arithmetic.
struct CyclotomicPiece {
  std::uint64_t d;       // divisor of m
  std::uint64_t degree;  // ord_d(q)
  std::uint64_t count;   // phi(d) / ord_d(q)
};

struct XnShape {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint32_t t = 0;
  std::uint64_t multiplicity = 1;  // p^t
  std::vector<CyclotomicPiece> pieces;
  std::uint64_t distinct = 0;  // sum of counts
};

XnShape xn_shape(std::uint64_t q, std::uint64_t n);

// W_q(x^n - 1) = 2^{#distinct irreducible factors}.
BigInt w_exact(const XnShape& shape);

// A divisor of x^n - 1 as exponents over XnFactorization::irreducibles().
using DivisorExponents = std::vector<std::uint32_t>;

class XnFactorization {
 public:
  XnFactorization(const BaseField& fq, XnShape shape, std::vector<FqPoly> irreducibles);

  const BaseField& base() const noexcept { return *fq_; }
  const XnShape& shape() const noexcept { return shape_; }
  std::uint64_t n() const noexcept { return shape_.n; }
  std::uint64_t q() const noexcept { return shape_.q; }
  std::uint64_t multiplicity() const noexcept { return shape_.multiplicity; }
  // Distinct monic irreducible factors ordered by degree, then canonically.
  const std::vector<FqPoly>& irreducibles() const noexcept { return irreducibles_; }
  std::size_t distinct_count() const noexcept { return irreducibles_.size(); }

  DivisorExponents full() const { return DivisorExponents(irreducibles_.size(), shape_.multiplicity); }
  DivisorExponents unit() const { return DivisorExponents(irreducibles_.size(), 0); }
  FqPoly expand(const DivisorExponents& e) const;
  long degree_of(const DivisorExponents& e) const;
  // Exponent vector of a monic divisor; kNotADivisor otherwise.
  DivisorExponents exponents_of(const FqPoly& f) const;
  // All monic divisors, exponent vectors in lexicographic order.
  void for_each_divisor(const std::function<void(const DivisorExponents&)>& visit) const;
  std::uint64_t divisor_count() const;

 private:
  const BaseField* fq_;
  XnShape shape_;
  std::vector<FqPoly> irreducibles_;
};

// Splits x^n - 1 through a primitive m-th root of unity in F_{q^k},
// k = ord_m(q): each q-cyclotomic coset C mod m gives the factor
// prod_{c in C} (x - zeta^c).
// The result refers to ctx.base() and must not outlive ctx.
XnFactorization factor_xn_minus_1(const FieldContext& ctx);

struct ArithValues {
  BigInt phi;
  int mu = 1;
  bool squarefree = true;
};

// Polynomial Euler function, Moebius function, and squarefreeness.
ArithValues arith_functions(const XnFactorization& fact, const DivisorExponents& e);
ArithValues arith_functions(const XnFactorization& fact, const FqPoly& f);
BigInt w_exact(const XnFactorization& fact);

// L_f(a) = sum f_i a^{q^i}.
template <ExtensionField F>
typename F::value_type apply_lf(const F& field, const FqPoly& f, const typename F::value_type& a) {
  auto result = field.zero();
  auto conj = a;
  const auto deg = f.degree();
  for (long i = 0; i <= deg; ++i) {
    if (f[i] != 0) result = field.add(result, field.mul(field.embed(f[i]), conj));
    if (i < deg) conj = field.frobenius(conj, 1);
  }
  return result;
}

// Least divisor g of x^n - 1 (as exponents) with annihilates(g) true, given
// that the annihilating divisors are closed under taking multiples.
DivisorExponents peel_order(const XnFactorization& fact,
                            const std::function<bool(const DivisorExponents&)>& annihilates);

template <ExtensionField F>
DivisorExponents element_order_exponents(const F& field, const XnFactorization& fact,
                                         const typename F::value_type& a) {
  return peel_order(fact, [&](const DivisorExponents& g) {
    return field.is_zero(apply_lf(field, fact.expand(g), a));
  });
}

template <ExtensionField F>
FqPoly element_order(const F& field, const XnFactorization& fact, const typename F::value_type& a) {
  return fact.expand(element_order_exponents(field, fact, a));
}

}  // namespace prenorm

#endif  // PRENORM_FQ_POLY_HPP_
