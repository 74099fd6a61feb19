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


#include "prenorm/char_sums.hpp"

#include <cmath>

#include "prenorm/parallel.hpp"

namespace prenorm {

void RootTally::merge(const RootTally& other) {
  for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] += other.counts_[k];
}

std::uint64_t RootTally::total() const {
  std::uint64_t t = 0;
  for (auto c : counts_) t += c;
  return t;
}

Complex RootTally::value() const {
  const auto p = static_cast<std::uint32_t>(counts_.size());
  if (p == 2) return {static_cast<double>(counts_[0]) - static_cast<double>(counts_[1]), 0.0};
  Complex sum = 0;
  for (std::uint32_t k = 0; k < p; ++k) {
    if (counts_[k]) sum += static_cast<double>(counts_[k]) * root_of_unity(k, p);
  }
  return sum;
}

Complex root_of_unity(std::uint32_t k, std::uint32_t p) {
  k %= p;
  if (k == 0) return {1.0, 0.0};
  if (2 * k == p) return {-1.0, 0.0};
  return std::polar(1.0, 2 * std::numbers::pi * k / p);
}

CharacterTable::CharacterTable(const IndexedField& field, const XnFactorization& fact, unsigned jobs,
                               std::uint64_t budget)
    : field_(&field) {
  const std::uint64_t size = field.count();
  if (size > budget) throw Error(ErrorCode::kBudgetExceeded, "character table needs q^n <= " + std::to_string(budget));
  const auto orders = parallel_map<DivisorExponents>(
      size, jobs, [&](std::uint64_t c) { return char_order_exponents(field, fact, static_cast<std::uint32_t>(c)); });
  order_id_.resize(size);
  std::map<DivisorExponents, std::uint32_t> ids;
  for (std::uint64_t c = 0; c < size; ++c) {
    auto [it, fresh] = ids.try_emplace(orders[c], static_cast<std::uint32_t>(order_of_.size()));
    if (fresh) order_of_.push_back(orders[c]);
    order_id_[c] = it->second;
    classes_[orders[c]].push_back(static_cast<std::uint32_t>(c));
  }
  for (const auto& [e, members] : classes_) {
    const ArithValues av = arith_functions(fact, e);
    if (av.mu == 0) continue;
    squarefree_.push_back({members, av.mu / av.phi.get_d()});
  }
  scale_ = count_normal(fact).get_d() / static_cast<double>(size);
}

const std::vector<std::uint32_t>& CharacterTable::lambda(const DivisorExponents& e) const {
  static const std::vector<std::uint32_t> kEmpty;
  const auto it = classes_.find(e);
  return it == classes_.end() ? kEmpty : it->second;
}

IndicatorValue CharacterTable::indicator(std::uint32_t a) const {
  const IndexedField& f = *field_;
  Complex total = 0;
  for (const auto& sf : squarefree_) {
    RootTally tally(f.p());
    for (std::uint32_t c : sf.members) tally.add(f.abs_trace(f.mul(c, a)));
    total += sf.weight * tally.value();
  }
  IndicatorValue out{scale_ * total, 0};
  const double re = out.raw.real();
  out.rounded = re > 0.5 ? 1 : 0;
  if (std::abs(out.raw - Complex(out.rounded, 0.0)) > kIndicatorTolerance) {
    throw Error(ErrorCode::kRoundingUnstable, "indicator value " + std::to_string(re) + " is not near 0 or 1");
  }
  return out;
}

double ns_lower_bound(const BigInt& set_size, double M, const XnFactorization& fact) {
  if (M < 0) throw Error(ErrorCode::kInvalidArgument, "M must be nonnegative");
  const double phi = count_normal(fact).get_d();
  const double qn = ipow(BigInt(fact.q()), fact.n()).get_d();
  return phi * (set_size.get_d() - w_exact(fact).get_d() * M) / qn;
}

}  // namespace prenorm
