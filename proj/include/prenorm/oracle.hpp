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


#ifndef PRENORM_ORACLE_HPP_
#define PRENORM_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "prenorm/guarantees.hpp"
#include "prenorm/indexed_field.hpp"
#include "prenorm/norm_system.hpp"
#include "prenorm/normality.hpp"

namespace prenorm {

using Record = nlohmann::ordered_json;

struct FieldSpec {
  std::uint64_t p = 0;
  std::uint64_t s = 0;
  std::uint64_t n = 0;
  std::uint64_t q = 0;
  std::uint64_t size = 0;  // q^n
};

// Every (q, n) with q^n <= budget and min_n <= n <= max_n, ordered by q^n,
// then q.
std::vector<FieldSpec> fields_up_to(std::uint64_t budget, std::uint64_t min_n = 1,
                                    std::uint64_t max_n = std::uint64_t{1} << 32);
// kNotPrime unless q is a prime power.
std::shared_ptr<const FieldContext> context_for(std::uint64_t q, std::uint64_t n);

// A field small enough for tables, with its x^n - 1 factorization and a
// lazily computed normal bitmap.
class SmallField {
 public:
  SmallField(std::uint64_t q, std::uint64_t n, std::uint64_t budget = IndexedField::kDefaultBudget);

  const FieldContext& ctx() const noexcept { return *ctx_; }
  const std::shared_ptr<const FieldContext>& ctx_ptr() const noexcept { return ctx_; }
  const IndexedField& idx() const noexcept { return *idx_; }
  const XnFactorization& fact() const noexcept { return *fact_; }
  const std::vector<std::uint8_t>& normal(unsigned jobs = 1) const;

 private:
  std::shared_ptr<const FieldContext> ctx_;
  std::unique_ptr<IndexedField> idx_;
  std::unique_ptr<XnFactorization> fact_;
  mutable std::vector<std::uint8_t> normal_;
};

// "g^k" for a nonzero element, "0" otherwise.
std::string power_form(const IndexedField& f, std::uint32_t v);
Record tuple_json(const DivisorTuple& D);

using NormTuple = std::vector<std::uint32_t>;

// Norm tuple of every element of F^*, tallied in one multiplicative pass.
std::map<NormTuple, std::uint64_t> norm_histogram(const IndexedField& f, const DivisorTuple& D);

struct FiberReport {
  std::uint64_t count = 0;
  std::vector<std::uint32_t> elements;
  std::uint64_t normal_count = 0;
};

// Scans F^* as powers of the canonical primitive and keeps the elements whose
// norms match P. kBudgetExceeded when q^n > budget.
FiberReport exhaustive_fiber(const SmallField& field, const Prescription<std::uint32_t>& P,
                             std::uint64_t budget = std::uint64_t{1} << 20);

struct Thm1Report {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::vector<Fq> achieved;
  std::vector<Fq> missed;
  std::uint64_t normal_count = 0;
  // The exception set as stated in the literature: {-1} at (3, 2).
  std::vector<Fq> stated_missed;
  bool agrees_with_statement = true;
};

Thm1Report verify_thm1(const SmallField& field, unsigned jobs = 1);
Thm1Report verify_thm1(std::uint64_t q, std::uint64_t n, std::uint64_t budget = std::uint64_t{1} << 20,
                       unsigned jobs = 1);
Record to_record(const Thm1Report& r, const BaseField& fq);

// x^{q-1} - 1 divides prod over normal b of (x - N_{n/1}(b)).
bool appendix_certificate(const SmallField& field, unsigned jobs = 1);
bool appendix_certificate(std::uint64_t q, std::uint64_t n, std::uint64_t budget = std::uint64_t{1} << 16,
                          unsigned jobs = 1);

struct N2Row {
  Fq b = 0;
  std::uint64_t size = 0;
  std::uint64_t non_normal = 0;
};

struct N2Report {
  std::uint64_t q = 0;
  std::vector<N2Row> rows;
  bool sizes_ok = true;       // every fiber has q + 1 elements
  bool at_most_four = true;   // at most 4 non-normal elements per fiber
  bool every_norm_hit = true; // each fiber has a normal element
};

N2Report n2_fiber_analysis(std::uint64_t q, std::uint64_t budget = IndexedField::kDefaultBudget);

template <class V>
struct RandomSearch {
  bool found = false;
  V witness{};
  BigInt exponent;
  std::uint64_t samples = 0;
};

// Draws uniform members theta^{s0 + jL} of the fiber of P and tests each for
// normality; gives up after max_samples.
template <ExtensionField F>
RandomSearch<typename F::value_type> random_prescribed_witness(const F& field, const XnFactorization& fact,
                                                               const Prescription<typename F::value_type>& P,
                                                               std::uint64_t seed, std::uint64_t max_samples) {
  const FiberSolution sol = solve_prescribed(field, P);
  const NormalityTester<F> normal(field, fact);
  const auto theta = field.canonical_primitive();
  std::mt19937_64 rng(seed);
  RandomSearch<typename F::value_type> out;
  while (out.samples < max_samples) {
    ++out.samples;
    const BigInt e = sol.s0 + uniform_below(rng, sol.count) * sol.L;
    const auto a = field.pow(theta, e);
    if (normal(a)) {
      out.found = true;
      out.witness = a;
      out.exponent = e;
      break;
    }
  }
  return out;
}

// One instance of the fiber-count law: every norm tuple realized by F^* has
// gcd-many preimages and is admissible, and sampled or enumerated tuples are
// admissible exactly when realized.
Record lemma1_instance(const SmallField& field, const DivisorTuple& D, std::uint64_t seed,
                       std::uint64_t exhaustive_limit = 10000, std::uint64_t samples = 100);

// Every admissible tuple for D has a normal preimage. With `search`, each one
// is also fed to find_normal_prescribed and the witness checked.
Record soundness_instance(const SmallField& field, const DivisorTuple& D, const GuaranteeVerdict& verdict,
                          bool search, unsigned jobs = 1);

// Coset sums for every admissible tuple and nontrivial twist, plus the
// normal-count lower bound on each fiber.
Record charsum_instance(const SmallField& field, const DivisorTuple& D);

struct SuiteReport {
  std::string suite;
  std::uint64_t budget = 0;
  std::vector<Record> records;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;

  bool passed() const noexcept { return failed == 0; }
  Record summary() const;
};

const std::vector<std::string>& suite_names();
// kInvalidArgument for an unknown suite name.
SuiteReport run_suite(std::string_view name, std::uint64_t budget, unsigned jobs = 1, std::uint64_t seed = 1);

}  // namespace prenorm

#endif  // PRENORM_ORACLE_HPP_
