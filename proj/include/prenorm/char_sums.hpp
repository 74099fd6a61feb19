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


#ifndef PRENORM_CHAR_SUMS_HPP_
#define PRENORM_CHAR_SUMS_HPP_

#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <vector>

#include "prenorm/fq_poly.hpp"
#include "prenorm/indexed_field.hpp"
#include "prenorm/norm_system.hpp"

namespace prenorm {

using Complex = std::complex<double>;

// Multiset of exponents k mod p standing for sum exp(2 pi i k / p); the
// complex value is formed once, at the end.
class RootTally {
 public:
  explicit RootTally(std::uint32_t p) : counts_(p, 0) {}

  void add(std::uint32_t k, std::uint64_t times = 1) { counts_[k] += times; }
  void merge(const RootTally& other);
  std::uint64_t total() const;
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  Complex value() const;

 private:
  std::vector<std::uint64_t> counts_;
};

// exp(2 pi i k / p).
Complex root_of_unity(std::uint32_t k, std::uint32_t p);

// psi_c(a) = psi_1(c a), psi_1(x) = exp(2 pi i Tr(x) / p), absolute trace.
template <ExtensionField F>
Complex psi(const F& field, const typename F::value_type& c, const typename F::value_type& a) {
  return root_of_unity(field.abs_trace(field.mul(c, a)), field.base().p());
}

// psi_c o h is trivial iff Tr_{q^n/q}(c L_h(b_j)) = 0 on an F_q-basis b_j.
template <ExtensionField F>
DivisorExponents char_order_exponents(const F& field, const XnFactorization& fact, const typename F::value_type& c) {
  std::vector<typename F::value_type> basis;
  for (std::uint32_t j = 0; j < field.degree(); ++j) basis.push_back(field.basis(j));
  return peel_order(fact, [&](const DivisorExponents& g) {
    if (field.is_zero(c)) return true;
    const FqPoly h = fact.expand(g);
    for (const auto& b : basis) {
      if (field.rel_trace(field.mul(c, apply_lf(field, h, b))) != 0) return false;
    }
    return true;
  });
}

template <ExtensionField F>
FqPoly char_order(const F& field, const XnFactorization& fact, const typename F::value_type& c) {
  return fact.expand(char_order_exponents(field, fact, c));
}

struct IndicatorValue {
  Complex raw;
  int rounded = 0;
};

// Every additive character of a small field, grouped by F_q-order.
class CharacterTable {
 public:
  static constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 16;

  // kBudgetExceeded when q^n > budget.
  CharacterTable(const IndexedField& field, const XnFactorization& fact, unsigned jobs = 1,
                 std::uint64_t budget = kDefaultBudget);

  const DivisorExponents& order(std::uint32_t c) const { return order_of_[order_id_[c]]; }
  // Lambda_f for the divisor with exponents e (empty if none).
  const std::vector<std::uint32_t>& lambda(const DivisorExponents& e) const;
  const std::map<DivisorExponents, std::vector<std::uint32_t>>& classes() const noexcept { return classes_; }

  // Phi(x^n-1)/q^n sum_{f | x^n-1} mu(f)/Phi(f) sum_{psi in Lambda_f} psi(a),
  // rounded; kRoundingUnstable when the raw value is over 1e-6 from 0 or 1.
  IndicatorValue indicator(std::uint32_t a) const;

 private:
  struct Squarefree {
    std::vector<std::uint32_t> members;
    double weight;  // mu(f) / Phi(f)
  };

  const IndexedField* field_;
  std::vector<DivisorExponents> order_of_;
  std::vector<std::uint32_t> order_id_;
  std::map<DivisorExponents, std::vector<std::uint32_t>> classes_;
  std::vector<Squarefree> squarefree_;
  double scale_ = 0;  // Phi(x^n-1) / q^n
};

inline constexpr double kIndicatorTolerance = 1e-6;

struct CosetSum {
  Complex value;
  RootTally tally;
  BigInt size;
};

// sum of psi_c over the norm fiber of P; kNotAdmissible for an inadmissible
// P, kBudgetExceeded when the fiber holds more than `budget` elements.
template <ExtensionField F>
CosetSum coset_sum(const F& field, const Prescription<typename F::value_type>& P, const typename F::value_type& c,
                   std::uint64_t budget = std::uint64_t{1} << 22) {
  const FiberSolution sol = solve_prescribed(field, P);
  if (sol.count > budget) throw Error(ErrorCode::kBudgetExceeded, "fiber has " + to_decimal(sol.count) + " elements");
  const auto theta = field.canonical_primitive();
  const auto step = field.pow(theta, sol.L);
  auto x = field.mul(c, field.pow(theta, sol.s0));
  RootTally tally(field.base().p());
  const std::uint64_t count = to_u64(sol.count);
  for (std::uint64_t j = 0; j < count; ++j) {
    tally.add(field.abs_trace(x));
    x = field.mul(x, step);
  }
  return {tally.value(), tally, sol.count};
}

// Phi(x^n-1) (set_size - W M) / q^n: a strict lower bound for the number of
// normal elements in any S of that size with |sum_S psi| <= M for every
// nontrivial psi.
double ns_lower_bound(const BigInt& set_size, double M, const XnFactorization& fact);

}  // namespace prenorm

#endif  // PRENORM_CHAR_SUMS_HPP_
