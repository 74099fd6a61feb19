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

#include "prenorm/normality.hpp"

#include "prenorm/parallel.hpp"

namespace prenorm {

BigInt count_normal(const XnFactorization& fact) { return arith_functions(fact, fact.full()).phi; }

std::vector<std::uint8_t> normal_bitmap(const IndexedField& field, const XnFactorization& fact, unsigned jobs) {
  const NormalityTester<IndexedField> tester(field, fact);
  std::vector<std::uint8_t> out(field.count(), 0);
  parallel_slices(field.count(), jobs, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t v = begin; v < end; ++v) out[v] = tester(static_cast<std::uint32_t>(v)) ? 1 : 0;
  });
  return out;
}

std::vector<Element> normal_elements(const std::shared_ptr<const FieldContext>& ctx, std::uint64_t budget) {
  if (ctx->size() > BigInt(budget)) {
    throw Error(ErrorCode::kBudgetExceeded, "field of size " + to_decimal(ctx->size()) + " exceeds budget " +
                                                std::to_string(budget));
  }
  const IndexedField field(ctx, budget);
  const auto fact = factor_xn_minus_1(*ctx);
  const auto bits = normal_bitmap(field, fact);
  std::vector<Element> out;
  for (std::uint64_t v = 0; v < bits.size(); ++v) {
    if (bits[v]) out.push_back(field.to_element(static_cast<std::uint32_t>(v)));
  }
  return out;
}

Element RandomNormalStream::next() {
  for (;;) {
    Element a = random_element(*ctx_, rng_);
    ++draws_;
    if (tester_(a)) return a;
  }
}

}  // namespace prenorm
