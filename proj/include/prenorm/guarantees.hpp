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


#ifndef PRENORM_GUARANTEES_HPP_
#define PRENORM_GUARANTEES_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "prenorm/bigint.hpp"
#include "prenorm/norm_system.hpp"

namespace prenorm {

enum class WRegime { kLargeQ, kMidQ, kSmallQ };

// W_q(x^n - 1) <= 2^{(n + a) / b}.
struct WBoundParams {
  std::uint64_t a = 0;
  std::uint64_t b = 1;
  WRegime regime = WRegime::kLargeQ;
};

WBoundParams w_bound_params(std::uint64_t q);

// The real number 2^{num/den}, compared against integers exactly.
struct PowerOfTwoBound {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  // x <= 2^{num/den}, i.e. x^den <= 2^num.
  bool admits(const BigInt& x) const;
  std::string to_string() const;
};

PowerOfTwoBound w_bound(std::uint64_t q, std::uint64_t n);
PowerOfTwoBound w_bound_trivial(std::uint64_t n);

enum class Verdict {
  kCertifiedThm1,
  kCertifiedThm2,
  kCertifiedThm3,
  kCertifiedThm4,
  kKnownException,
  kAsymptoticOnly,
  kUnknown,
};

std::string_view to_string(Verdict v);
bool is_certified(Verdict v);

enum class Relation { kGreater, kGreaterEqual, kEqual, kLessEqual, kLess, kNotEqual };

std::string_view to_string(Relation r);

// One exact integer comparison. Inequalities sharing a group are read
// together: the group yields `certifies` when all of its decisive members
// hold. Non-decisive members are recorded for reference only.
struct Inequality {
  std::string name;
  std::string group;
  Verdict certifies = Verdict::kUnknown;
  BigInt lhs;
  BigInt rhs;
  Relation relation = Relation::kGreater;
  bool decisive = true;

  bool holds() const;
};

struct GuaranteeVerdict {
  Verdict status = Verdict::kUnknown;
  std::string region;
  std::vector<Inequality> evidence;
  // classify only: statuses of the conditions after the deciding one that
  // would also have certified the instance.
  std::vector<Verdict> also;
};

// Status implied by the evidence: the first certifying group (in order of
// appearance) whose decisive inequalities all hold; failing that, the first
// holding group of another status; else kUnknown.
Verdict rederive(const std::vector<Inequality>& evidence);
std::string group_of(const std::vector<Inequality>& evidence, Verdict v);

GuaranteeVerdict thm1_condition(std::uint64_t q, std::uint64_t n);
// Requires a strict tuple; k = 1 is accepted and evaluates the same coset
// inequality for the single fiber.
GuaranteeVerdict thm2_condition(std::uint64_t q, const DivisorTuple& D, bool with_w_bound = false);
GuaranteeVerdict thm3_condition(const DivisorTuple& D);
GuaranteeVerdict thm4_condition(std::uint64_t q, const DivisorTuple& D);

struct CoprimeReduction {
  BigInt Q;
  std::uint64_t g = 1;
  std::uint64_t d1 = 0;
  std::uint64_t d2 = 0;
};

// F_{q^{d_i}} = F_{Q^{d_i/g}} with Q = q^g, g = gcd(d1, d2).
CoprimeReduction reduce_to_coprime(const BigInt& q, std::uint64_t d1, std::uint64_t d2);

// k = 1, d = 1: thm1_condition. k = 1, d > 1: the coset inequality for the
// fiber of N_{n/d}. k >= 2: thm3_condition, then thm4, then thm2; the first
// certifying condition wins and the evidence of every evaluated condition is
// kept. With none certifying, the coprime large-q case gives kAsymptoticOnly.
GuaranteeVerdict classify(std::uint64_t q, const DivisorTuple& D);

}  // namespace prenorm

#endif  // PRENORM_GUARANTEES_HPP_
