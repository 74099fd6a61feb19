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

#ifndef PRENORM_INDEXED_FIELD_HPP_
#define PRENORM_INDEXED_FIELD_HPP_

#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <vector>

#include "prenorm/field_tower.hpp"

namespace prenorm {

// F_{q^n} with elements named by their canonical index (see
// FieldContext::to_index) and arithmetic through log/antilog tables taken
// with respect to the canonical primitive element. Addition is XOR in
// characteristic 2 and a Zech-logarithm lookup otherwise. Meant for the
// exhaustive sweeps; sizes are capped by a budget.
class IndexedField {
 public:
  using value_type = std::uint32_t;
  static constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;

  explicit IndexedField(std::shared_ptr<const FieldContext> ctx, std::uint64_t budget = kDefaultBudget);

  const FieldContext& context() const noexcept { return *ctx_; }
  const std::shared_ptr<const FieldContext>& context_ptr() const noexcept { return ctx_; }
  std::uint32_t degree() const noexcept { return ctx_->degree(); }
  std::uint32_t p() const noexcept { return ctx_->p(); }
  std::uint64_t q() const noexcept { return ctx_->q(); }
  const BaseField& base() const noexcept { return ctx_->base(); }
  std::uint64_t count() const noexcept { return size_; }
  const BigInt& size() const noexcept { return ctx_->size(); }
  const BigInt& group_order() const noexcept { return ctx_->group_order(); }
  std::uint64_t group_order_u64() const noexcept { return order_; }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  value_type embed(Fq c) const noexcept { return c; }
  value_type basis(std::uint32_t j) const noexcept { return static_cast<value_type>(qpow_[j]); }
  bool is_zero(value_type a) const noexcept { return a == 0; }

  value_type add(value_type a, value_type b) const noexcept {
    if (even_) return a ^ b;
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t la = log_[a];
    const std::uint32_t lb = log_[b];
    const std::uint32_t z = zech_[lb >= la ? lb - la : static_cast<std::uint32_t>(lb + order_ - la)];
    if (z == kNoLog) return 0;
    return exp_[add_exp(la, z)];
  }
  value_type neg(value_type a) const noexcept {
    if (even_ || a == 0) return a;
    return exp_[add_exp(log_[a], static_cast<std::uint32_t>(order_ / 2))];
  }
  value_type sub(value_type a, value_type b) const noexcept { return add(a, neg(b)); }
  value_type mul(value_type a, value_type b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[add_exp(log_[a], log_[b])];
  }
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const;
  value_type pow(value_type a, const BigInt& e) const;
  value_type pow_u64(value_type a, std::uint64_t e) const noexcept;
  value_type frobenius(value_type a, std::uint64_t i) const noexcept {
    if (a == 0) return 0;
    return exp_[mulmod_u64(log_[a], frob_exp_[i % degree()], order_)];
  }
  bool is_in_subfield(value_type a, std::uint64_t d) const;

  // Discrete logarithm to the base of the canonical primitive; a != 0.
  std::uint32_t log(value_type a) const noexcept { return log_[a]; }
  value_type exp(std::uint64_t k) const noexcept { return exp_[k % order_]; }
  value_type canonical_primitive() const noexcept { return order_ == 1 ? 1 : exp_[1]; }

  Fq rel_trace(value_type a) const;
  std::uint32_t abs_trace(value_type a) const;

  Element to_element(value_type a) const;
  value_type from_element(const Element& a) const;

 private:
  static constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t add_exp(std::uint32_t x, std::uint32_t y) const noexcept {
    const std::uint64_t s = std::uint64_t{x} + y;
    return static_cast<std::uint32_t>(s >= order_ ? s - order_ : s);
  }
  void build_traces() const;

  std::shared_ptr<const FieldContext> ctx_;
  std::uint64_t size_;
  std::uint64_t order_;
  bool even_;
  std::vector<std::uint64_t> qpow_;      // q^i as indices
  std::vector<std::uint64_t> frob_exp_;  // q^i mod (q^n - 1)
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;

  mutable std::once_flag traces_once_;
  mutable std::vector<Fq> rel_trace_;
  mutable std::vector<std::uint32_t> abs_trace_;
};

static_assert(ExtensionField<IndexedField>);

}  // namespace prenorm

#endif  // PRENORM_INDEXED_FIELD_HPP_
