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

// The tower F_p < F_q < F_{q^n}. F_q is BaseField; F_{q^n} is
// F_q[x]/(M(x)) with M the canonical (least) monic irreducible of degree n.
// Elements are exact coefficient vectors over F_q.

#ifndef PRENORM_FIELD_TOWER_HPP_
#define PRENORM_FIELD_TOWER_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prenorm/base_field.hpp"
#include "prenorm/bigint.hpp"

namespace prenorm {

struct PrimePower {
  std::uint32_t p = 2;
  std::uint32_t s = 1;
  std::uint64_t q = 2;

  // Validates primality of p and that p^s fits in 32 bits.
  static PrimePower make(std::uint64_t p, std::uint64_t s);
  // Splits q into p^s; kNotPrime when q is not a prime power.
  static PrimePower from_q(std::uint64_t q);
};

class Element {
 public:
  Element() = default;
  explicit Element(std::vector<Fq> coeffs) : coeffs_(std::move(coeffs)) {}

  std::span<const Fq> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  Fq operator[](std::size_t i) const { return coeffs_[i]; }
  Fq& operator[](std::size_t i) { return coeffs_[i]; }

  friend bool operator==(const Element&, const Element&) = default;
  // Canonical order: the highest coefficient is most significant.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

 private:
  std::vector<Fq> coeffs_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

class FieldContext {
 public:
  using value_type = Element;

  FieldContext(PrimePower base, std::uint32_t n);
  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;

  const PrimePower& prime_power() const noexcept { return base_; }
  std::uint32_t p() const noexcept { return base_.p; }
  std::uint64_t q() const noexcept { return base_.q; }
  std::uint32_t degree() const noexcept { return n_; }
  const BaseField& base() const noexcept { return fq_; }
  // Monic modulus over F_q, least degree first (length n + 1).
  std::span<const Fq> modulus() const noexcept { return modulus_; }

  const BigInt& size() const noexcept { return size_; }
  const BigInt& group_order() const noexcept { return group_order_; }

  Element zero() const { return Element(std::vector<Fq>(n_, 0)); }
  Element one() const { return embed(1); }
  Element embed(Fq c) const;
  Element basis(std::uint32_t j) const;
  // Canonical indexing: index = sum coeffs[i] * q^i.
  Element from_index(const BigInt& index) const;
  BigInt to_index(const Element& a) const;

  // Throws kContextMismatch unless a is a well-formed element of this field.
  void check(const Element& a) const;

  bool is_zero(const Element& a) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const;
  Element scale(Fq c, const Element& a) const;
  // 0^0 = 1.
  Element pow(const Element& a, const BigInt& e) const;

  // a^{q^i}; the Frobenius is F_q-linear, applied via its matrix.
  Element frobenius(const Element& a, std::uint64_t i) const;
  // True iff a^{q^d} = a; kNotADivisor unless d | n.
  bool is_in_subfield(const Element& a, std::uint64_t d) const;
  // Tr_{F_{q^n}/F_q}(a).
  Fq rel_trace(const Element& a) const;
  // Tr_{F_{q^n}/F_p}(a) as a digit in [0, p).
  std::uint32_t abs_trace(const Element& a) const;

  // Least element (canonical order) of multiplicative order q^n - 1.
  // Computed once and cached.
  const Element& canonical_primitive() const;
  // Prime factors of q^n - 1 with multiplicity, cached.
  const std::vector<BigInt>& group_order_factors() const;
  std::vector<BigInt> group_order_primes() const;

  // "p^s^n" form used in records.
  std::string shape() const;

 private:
  std::vector<Fq> reduce(std::vector<Fq> wide) const;
  Element apply_frobenius_once(const Element& a) const;

  PrimePower base_;
  std::uint32_t n_;
  BaseField fq_;
  std::vector<Fq> modulus_;
  // frobenius_images_[j] = x^{q j} mod M.
  std::vector<std::vector<Fq>> frobenius_images_;
  BigInt size_;
  BigInt group_order_;

  mutable std::once_flag theta_once_;
  mutable Element theta_;
  mutable std::once_flag factors_once_;
  mutable std::vector<BigInt> factors_;
};

// The operations every algorithm over F_{q^n} relies on. FieldContext
// (exact coefficient vectors) and IndexedField (table lookups) both model it.
template <class F>
concept ExtensionField =
    FieldOps<F> && requires(const F& f, const typename F::value_type& a, Fq c, std::uint32_t j, std::uint64_t i,
                            const BigInt& e) {
      { f.degree() } -> std::convertible_to<std::uint32_t>;
      { f.q() } -> std::convertible_to<std::uint64_t>;
      { f.base() } -> std::same_as<const BaseField&>;
      { f.group_order() } -> std::convertible_to<const BigInt&>;
      { f.embed(c) } -> std::convertible_to<typename F::value_type>;
      { f.basis(j) } -> std::convertible_to<typename F::value_type>;
      { f.neg(a) } -> std::convertible_to<typename F::value_type>;
      { f.pow(a, e) } -> std::convertible_to<typename F::value_type>;
      { f.frobenius(a, i) } -> std::convertible_to<typename F::value_type>;
      { f.is_in_subfield(a, i) } -> std::convertible_to<bool>;
      { f.rel_trace(a) } -> std::convertible_to<Fq>;
      { f.abs_trace(a) } -> std::convertible_to<std::uint32_t>;
      { f.canonical_primitive() } -> std::convertible_to<typename F::value_type>;
    };

static_assert(ExtensionField<FieldContext>);

// Builds F_{p^{s n}} as a tower over F_{p^s}. kNotPrime for composite p,
// kDegreeZero for s = 0 or n = 0.
std::shared_ptr<const FieldContext> build_context(std::uint64_t p, std::uint64_t s, std::uint64_t n);

// Uniform in [0, bound) by rejection, identical on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
BigInt uniform_below(std::mt19937_64& rng, const BigInt& bound);
Element random_element(const FieldContext& ctx, std::mt19937_64& rng);

// Text forms. Elements print as nested digit lists, outer length n, inner
// length s, least significant first: "[[1,0],[0,1],[0,0]]". Parsing also
// accepts "g^k" (canonical primitive to the k) and plain integers, which
// embed into the prime field.
std::string format_fq(const BaseField& fq, Fq c);
std::string format_element(const FieldContext& ctx, const Element& a);
Element parse_element(const FieldContext& ctx, std::string_view text);
Fq parse_fq(const BaseField& fq, std::string_view text);

}  // namespace prenorm

#endif  // PRENORM_FIELD_TOWER_HPP_
