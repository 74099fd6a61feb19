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

#include "prenorm/indexed_field.hpp"

namespace prenorm {

IndexedField::IndexedField(std::shared_ptr<const FieldContext> ctx, std::uint64_t budget) : ctx_(std::move(ctx)) {
  if (ctx_->size() > BigInt(budget) || ctx_->size() > BigInt(std::uint64_t{1} << 32)) {
    throw Error(ErrorCode::kBudgetExceeded,
                "field of size " + to_decimal(ctx_->size()) + " exceeds table budget " + std::to_string(budget));
  }
  size_ = to_u64(ctx_->size());
  order_ = size_ - 1;
  even_ = ctx_->p() == 2;
  const std::uint32_t n = ctx_->degree();
  const std::uint64_t q = ctx_->q();
  for (std::uint32_t i = 0; i < n; ++i) {
    qpow_.push_back(i == 0 ? 1 : qpow_.back() * q);
    frob_exp_.push_back(i == 0 ? 1 % order_ : mulmod_u64(frob_exp_.back(), q, order_));
  }

  // Multiplication by theta is F_q-linear; column j holds theta * x^j.
  const BaseField& fq = ctx_->base();
  const Element& theta = ctx_->canonical_primitive();
  std::vector<std::vector<Fq>> columns;
  for (std::uint32_t j = 0; j < n; ++j) {
    const Element col = ctx_->mul(theta, ctx_->basis(j));
    columns.emplace_back(col.coeffs().begin(), col.coeffs().end());
  }
  exp_.resize(order_);
  log_.assign(size_, kNoLog);
  std::vector<Fq> cur(n, 0);
  std::vector<Fq> next(n, 0);
  cur[0] = 1;
  for (std::uint64_t k = 0; k < order_; ++k) {
    std::uint64_t index = 0;
    for (std::uint32_t i = n; i-- > 0;) index = index * q + cur[i];
    exp_[k] = static_cast<std::uint32_t>(index);
    log_[index] = static_cast<std::uint32_t>(k);
    std::fill(next.begin(), next.end(), 0);
    for (std::uint32_t j = 0; j < n; ++j) {
      if (cur[j] == 0) continue;
      const auto& col = columns[j];
      for (std::uint32_t i = 0; i < n; ++i) next[i] = fq.add(next[i], fq.mul(cur[j], col[i]));
    }
    cur.swap(next);
  }
  if (!even_) {
    const std::uint32_t p = ctx_->p();
    zech_.resize(order_);
    for (std::uint64_t k = 0; k < order_; ++k) {
      const std::uint32_t v = exp_[k];
      const std::uint32_t d0 = v % p;
      const std::uint32_t w = v - d0 + (d0 + 1) % p;
      zech_[k] = w == 0 ? kNoLog : log_[w];
    }
  }
}

IndexedField::value_type IndexedField::inv(value_type a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  const std::uint32_t la = log_[a];
  return exp_[la == 0 ? 0 : order_ - la];
}

IndexedField::value_type IndexedField::div(value_type a, value_type b) const { return mul(a, inv(b)); }

IndexedField::value_type IndexedField::pow(value_type a, const BigInt& e) const {
  if (e < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
  if (e == 0) return 1;
  if (a == 0) return 0;
  const BigInt reduced = e % BigInt(order_);
  return exp_[mulmod_u64(log_[a], reduced.get_ui(), order_)];
}

IndexedField::value_type IndexedField::pow_u64(value_type a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[mulmod_u64(log_[a], e % order_, order_)];
}

bool IndexedField::is_in_subfield(value_type a, std::uint64_t d) const {
  if (d == 0 || degree() % d != 0) {
    throw Error(ErrorCode::kNotADivisor, std::to_string(d) + " does not divide " + std::to_string(degree()));
  }
  return frobenius(a, d) == a;
}

void IndexedField::build_traces() const {
  std::call_once(traces_once_, [this] {
    rel_trace_.resize(size_);
    abs_trace_.resize(size_);
    const BaseField& fq = ctx_->base();
    for (std::uint64_t v = 0; v < size_; ++v) {
      value_type sum = 0;
      for (std::uint32_t i = 0; i < degree(); ++i) sum = add(sum, frobenius(static_cast<value_type>(v), i));
      // The sum lies in F_q, whose indices are exactly [0, q).
      rel_trace_[v] = sum;
      abs_trace_[v] = fq.trace_to_prime(sum);
    }
  });
}

Fq IndexedField::rel_trace(value_type a) const {
  build_traces();
  return rel_trace_[a];
}

std::uint32_t IndexedField::abs_trace(value_type a) const {
  build_traces();
  return abs_trace_[a];
}

Element IndexedField::to_element(value_type a) const {
  std::vector<Fq> coeffs(degree());
  std::uint64_t v = a;
  for (auto& c : coeffs) {
    c = static_cast<Fq>(v % q());
    v /= q();
  }
  return Element(std::move(coeffs));
}

IndexedField::value_type IndexedField::from_element(const Element& a) const {
  ctx_->check(a);
  std::uint64_t index = 0;
  for (std::size_t i = a.size(); i-- > 0;) index = index * q() + a[i];
  return static_cast<value_type>(index);
}

}  // namespace prenorm
