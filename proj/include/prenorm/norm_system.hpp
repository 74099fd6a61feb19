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

#ifndef PRENORM_NORM_SYSTEM_HPP_
#define PRENORM_NORM_SYSTEM_HPP_

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prenorm/normality.hpp"
#include "prenorm/parallel.hpp"

namespace prenorm {

// Increasing proper divisors of n. A strict tuple is also an antichain under
// divisibility; relaxed tuples skip that check.
struct DivisorTuple {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> d;
  bool relaxed = false;

  // kInvalidTuple unless the entries are increasing proper divisors of n
  // (and pairwise non-dividing when strict).
  static DivisorTuple make(std::uint64_t n, std::vector<std::uint64_t> d, bool relaxed = false);
  std::size_t k() const noexcept { return d.size(); }
  bool is_antichain() const;
  std::string to_string() const;
};

// Gamma_k(n) in lexicographic order.
std::vector<DivisorTuple> enumerate_gamma(std::uint64_t n, std::size_t k);
// Every strict tuple of size 1..max_k.
std::vector<DivisorTuple> enumerate_tuples(std::uint64_t n, std::size_t max_k);

// (q^n - 1) / (q^d - 1).
BigInt norm_exponent(std::uint64_t q, std::uint64_t n, std::uint64_t d);

// gcd_i (q^n - 1)/(q^{d_i} - 1).
BigInt fiber_count(std::uint64_t q, const DivisorTuple& D);
// (q^n - 1)(q - 1)^{k-1} / prod(q^{d_i} - 1); only meaningful for pairwise
// coprime d_i, nullopt otherwise.
std::optional<BigInt> fiber_count_coprime(std::uint64_t q, const DivisorTuple& D);

enum class Admissibility { kUnchecked, kYes, kNo };

template <class V>
struct Prescription {
  DivisorTuple D;
  std::vector<V> A;
  Admissibility admissible = Admissibility::kUnchecked;
};

template <ExtensionField F>
typename F::value_type norm_to(const F& field, const typename F::value_type& a, std::uint64_t d) {
  if (d == 0 || field.degree() % d != 0) {
    throw Error(ErrorCode::kNotADivisor, std::to_string(d) + " does not divide " + std::to_string(field.degree()));
  }
  if (field.is_zero(a)) return field.zero();
  return field.pow(a, norm_exponent(field.q(), field.degree(), d));
}

// N_{d/e}(a) for a in F_{q^d}.
template <ExtensionField F>
typename F::value_type norm_rel(const F& field, const typename F::value_type& a, std::uint64_t d, std::uint64_t e) {
  if (d == 0 || e == 0 || field.degree() % d != 0 || d % e != 0) {
    throw Error(ErrorCode::kNotADivisor, "need e | d | n, got e=" + std::to_string(e) + " d=" + std::to_string(d));
  }
  if (!field.is_in_subfield(a, d)) {
    throw Error(ErrorCode::kNotInSubfield, "value is not in the degree-" + std::to_string(d) + " subfield");
  }
  if (field.is_zero(a)) return field.zero();
  return field.pow(a, norm_exponent(field.q(), d, e));
}

// kNotInSubfield / kInvalidArgument unless every a_i is a nonzero element of
// F_{q^{d_i}} and |A| = |D|.
template <ExtensionField F>
void validate_prescription(const F& field, const Prescription<typename F::value_type>& P) {
  if (P.D.n != field.degree()) throw Error(ErrorCode::kInvalidTuple, "divisor tuple is for a different n");
  if (P.A.size() != P.D.k()) throw Error(ErrorCode::kInvalidArgument, "need one norm value per divisor");
  for (std::size_t i = 0; i < P.A.size(); ++i) {
    if (field.is_zero(P.A[i])) throw Error(ErrorCode::kInvalidArgument, "prescribed norms must be nonzero");
    if (!field.is_in_subfield(P.A[i], P.D.d[i])) {
      throw Error(ErrorCode::kNotInSubfield, "a_" + std::to_string(i + 1) + " is not in F_{q^" +
                                                 std::to_string(P.D.d[i]) + "}");
    }
  }
}

struct AdmissibilityReport {
  bool admissible = true;
  // First violated pair (i, j), 0-based, i < j.
  std::optional<std::pair<std::size_t, std::size_t>> violated;
};

template <ExtensionField F>
AdmissibilityReport check_admissible(const F& field, Prescription<typename F::value_type>& P) {
  validate_prescription(field, P);
  AdmissibilityReport report;
  for (std::size_t i = 0; i < P.D.k() && report.admissible; ++i) {
    for (std::size_t j = i + 1; j < P.D.k(); ++j) {
      const std::uint64_t g = gcd_u64(P.D.d[i], P.D.d[j]);
      if (norm_rel(field, P.A[i], P.D.d[i], g) != norm_rel(field, P.A[j], P.D.d[j], g)) {
        report.admissible = false;
        report.violated = std::make_pair(i, j);
        break;
      }
    }
  }
  P.admissible = report.admissible ? Admissibility::kYes : Admissibility::kNo;
  return report;
}

struct FiberSolution {
  std::vector<BigInt> t;
  std::vector<BigInt> moduli;  // q^{d_i} - 1
  BigInt s0;
  BigInt L;      // lcm of the moduli
  BigInt count;  // (q^n - 1) / L
};

// Merges x = r_i (mod m_i) pairwise; nullopt on inconsistency, together with
// the index of the first congruence that failed.
struct CrtResult {
  bool consistent = true;
  std::size_t failed_at = 0;
  BigInt residue;
  BigInt modulus;
};
CrtResult generalized_crt(const std::vector<BigInt>& residues, const std::vector<BigInt>& moduli);

inline constexpr std::uint64_t kDlogScanLimit = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDlogDefaultBudget = std::uint64_t{1} << 26;

template <class V>
struct ValueHash {
  std::size_t operator()(const V& v) const noexcept { return std::hash<V>{}(v); }
};
template <>
struct ValueHash<Element> : ElementHash {};

// k in [0, order) with base^k = target, base of exact order `order`.
// Scans for small orders, baby-step giant-step above kDlogScanLimit; needs
// about sqrt(order) memory and kDiscreteLogBudget when sqrt(order) > budget.
template <ExtensionField F>
BigInt discrete_log(const F& field, const typename F::value_type& base, const typename F::value_type& target,
                    const BigInt& order, std::uint64_t budget = kDlogDefaultBudget) {
  using V = typename F::value_type;
  if (order <= BigInt(kDlogScanLimit)) {
    const std::uint64_t ord = to_u64(order);
    V cur = field.one();
    for (std::uint64_t k = 0; k < ord; ++k) {
      if (cur == target) return BigInt(k);
      cur = field.mul(cur, base);
    }
    throw Error(ErrorCode::kInvalidArgument, "target is not in the subgroup");
  }
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), order.get_mpz_t());
  root += 1;
  if (root > BigInt(budget)) {
    throw Error(ErrorCode::kDiscreteLogBudget, "subgroup of order " + to_decimal(order) + " exceeds the budget");
  }
  const std::uint64_t m = to_u64(root);
  std::unordered_map<V, std::uint64_t, ValueHash<V>> baby;
  baby.reserve(m);
  V cur = field.one();
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = field.mul(cur, base);
  }
  const V giant = field.inv(cur);  // base^{-m}
  V gamma = target;
  for (std::uint64_t i = 0; i <= m; ++i) {
    const auto it = baby.find(gamma);
    if (it != baby.end()) {
      BigInt k = BigInt(i) * BigInt(m) + BigInt(it->second);
      return k % order;
    }
    gamma = field.mul(gamma, giant);
  }
  throw Error(ErrorCode::kInvalidArgument, "target is not in the subgroup");
}

// Exponent t with theta^{t (q^n-1)/(q^d-1)} = a for a in F_{q^d}^*.
template <ExtensionField F>
BigInt norm_preimage_exponent(const F& field, const typename F::value_type& a, std::uint64_t d,
                              std::uint64_t budget = kDlogDefaultBudget) {
  const BigInt e = norm_exponent(field.q(), field.degree(), d);
  if constexpr (std::is_same_v<F, IndexedField>) {
    // The log table gives log_theta(a) = t e directly.
    const BigInt la(field.log(a));
    if (la % e != 0) throw Error(ErrorCode::kNotInSubfield, "value is not in the subfield");
    return la / e;
  } else {
    const auto eta = field.pow(field.canonical_primitive(), e);
    return discrete_log(field, eta, a, ipow(BigInt(field.q()), d) - 1, budget);
  }
}

// Solves s = t_i (mod q^{d_i} - 1). kNotAdmissible when the congruences are
// inconsistent.
template <ExtensionField F>
FiberSolution solve_prescribed(const F& field, const Prescription<typename F::value_type>& P,
                               std::uint64_t dlog_budget = kDlogDefaultBudget) {
  validate_prescription(field, P);
  FiberSolution sol;
  for (std::size_t i = 0; i < P.D.k(); ++i) {
    sol.t.push_back(norm_preimage_exponent(field, P.A[i], P.D.d[i], dlog_budget));
    sol.moduli.push_back(ipow(BigInt(field.q()), P.D.d[i]) - 1);
  }
  const CrtResult crt = generalized_crt(sol.t, sol.moduli);
  if (!crt.consistent) {
    throw Error(ErrorCode::kNotAdmissible, "norm congruences are inconsistent at index " +
                                               std::to_string(crt.failed_at + 1));
  }
  sol.s0 = crt.residue;
  sol.L = crt.modulus;
  sol.count = field.group_order() / sol.L;
  return sol;
}

enum class SearchStatus { kFound, kNotFound, kInconclusive };
std::string_view to_string(SearchStatus s);

template <class V>
struct SearchResult {
  SearchStatus status = SearchStatus::kNotFound;
  V witness{};
  BigInt j;         // position in the fiber
  BigInt exponent;  // witness = theta^exponent
  BigInt scanned;   // fiber elements examined
  FiberSolution fiber;
};

struct SearchOptions {
  // Fiber positions examined before giving up as inconclusive.
  std::uint64_t scan_budget = std::uint64_t{1} << 20;
  unsigned jobs = 1;
  std::uint64_t dlog_budget = kDlogDefaultBudget;
};

// Scans alpha_j = theta^{s0 + j L} for j = 0, 1, ... and returns the least j
// giving a normal element. NotFound only after the whole fiber was examined.
template <ExtensionField F>
SearchResult<typename F::value_type> find_normal_prescribed(const F& field, const XnFactorization& fact,
                                                            const Prescription<typename F::value_type>& P,
                                                            const SearchOptions& options = {}) {
  using V = typename F::value_type;
  SearchResult<V> out;
  out.fiber = solve_prescribed(field, P, options.dlog_budget);
  const NormalityTester<F> tester(field, fact);
  const V theta = field.canonical_primitive();
  const V step = field.pow(theta, out.fiber.L);
  const bool exhaustive = out.fiber.count <= BigInt(options.scan_budget);
  const std::uint64_t limit = exhaustive ? to_u64(out.fiber.count) : options.scan_budget;
  // Blocks are scanned in order; inside a block the slices run in parallel
  // and the least hit wins, so the witness does not depend on jobs.
  const unsigned jobs = std::max(1u, options.jobs);
  const std::uint64_t block = std::max<std::uint64_t>(1024, 256 * std::uint64_t{jobs});
  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  for (std::uint64_t start = 0; start < limit; start += block) {
    const std::uint64_t len = std::min(block, limit - start);
    std::vector<std::uint64_t> hits(jobs, kNone);
    std::vector<V> found(jobs);
    std::atomic<unsigned> slot{0};
    parallel_slices(len, jobs, [&](std::uint64_t begin, std::uint64_t end) {
      const unsigned me = slot.fetch_add(1);
      V cur = field.pow(theta, out.fiber.s0 + BigInt(start + begin) * out.fiber.L);
      for (std::uint64_t j = begin; j < end; ++j) {
        if (tester(cur)) {
          hits[me] = start + j;
          found[me] = cur;
          return;
        }
        cur = field.mul(cur, step);
      }
    });
    std::size_t best = jobs;
    for (std::size_t w = 0; w < jobs; ++w) {
      if (hits[w] != kNone && (best == jobs || hits[w] < hits[best])) best = w;
    }
    if (best != jobs) {
      out.status = SearchStatus::kFound;
      out.witness = found[best];
      out.j = BigInt(hits[best]);
      out.exponent = out.fiber.s0 + out.j * out.fiber.L;
      out.scanned = out.j + 1;
      return out;
    }
  }
  out.scanned = BigInt(limit);
  out.status = exhaustive ? SearchStatus::kNotFound : SearchStatus::kInconclusive;
  return out;
}

}  // namespace prenorm

#endif  // PRENORM_NORM_SYSTEM_HPP_
