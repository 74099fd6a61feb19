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


#include "prenorm/guarantees.hpp"

#include <algorithm>
#include <numeric>

#include "prenorm/fq_poly.hpp"

namespace prenorm {

WBoundParams w_bound_params(std::uint64_t q) {
  if (q >= 29) return {0, 1, WRegime::kLargeQ};
  if (q >= 7) return {q - 1, 2, WRegime::kMidQ};
  switch (q) {
    case 2: return {14, 5, WRegime::kSmallQ};
    case 3: return {20, 4, WRegime::kSmallQ};
    case 4: return {12, 3, WRegime::kSmallQ};
    case 5: return {18, 3, WRegime::kSmallQ};
    default: break;
  }
  throw Error(ErrorCode::kNotPrime, std::to_string(q) + " is not a prime power");
}

bool PowerOfTwoBound::admits(const BigInt& x) const {
  if (x <= 0) return true;
  return ipow(x, den) <= ipow(BigInt(2), num);
}

std::string PowerOfTwoBound::to_string() const {
  const std::uint64_t g = std::gcd(num, den);
  if (den == g) return "2^" + std::to_string(num / g);
  return "2^(" + std::to_string(num / g) + "/" + std::to_string(den / g) + ")";
}

PowerOfTwoBound w_bound(std::uint64_t q, std::uint64_t n) {
  const WBoundParams p = w_bound_params(q);
  return {n + p.a, p.b};
}

PowerOfTwoBound w_bound_trivial(std::uint64_t n) { return {n, 1}; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kCertifiedThm1: return "CertifiedThm1";
    case Verdict::kCertifiedThm2: return "CertifiedThm2";
    case Verdict::kCertifiedThm3: return "CertifiedThm3";
    case Verdict::kCertifiedThm4: return "CertifiedThm4";
    case Verdict::kKnownException: return "KnownException";
    case Verdict::kAsymptoticOnly: return "AsymptoticOnly";
    case Verdict::kUnknown: return "Unknown";
  }
  return "Unknown";
}

bool is_certified(Verdict v) {
  return v == Verdict::kCertifiedThm1 || v == Verdict::kCertifiedThm2 || v == Verdict::kCertifiedThm3 ||
         v == Verdict::kCertifiedThm4;
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::kGreater: return ">";
    case Relation::kGreaterEqual: return ">=";
    case Relation::kEqual: return "=";
    case Relation::kLessEqual: return "<=";
    case Relation::kLess: return "<";
    case Relation::kNotEqual: return "!=";
  }
  return "?";
}

bool Inequality::holds() const {
  const int c = cmp(lhs, rhs);
  switch (relation) {
    case Relation::kGreater: return c > 0;
    case Relation::kGreaterEqual: return c >= 0;
    case Relation::kEqual: return c == 0;
    case Relation::kLessEqual: return c <= 0;
    case Relation::kLess: return c < 0;
    case Relation::kNotEqual: return c != 0;
  }
  return false;
}

namespace {

// Groups in order of first appearance.
std::vector<std::string> group_order(const std::vector<Inequality>& evidence) {
  std::vector<std::string> out;
  for (const auto& e : evidence) {
    if (std::find(out.begin(), out.end(), e.group) == out.end()) out.push_back(e.group);
  }
  return out;
}

bool group_holds(const std::vector<Inequality>& evidence, const std::string& group, Verdict* certifies) {
  bool any = false;
  for (const auto& e : evidence) {
    if (e.group != group || !e.decisive) continue;
    if (!e.holds()) return false;
    any = true;
    *certifies = e.certifies;
  }
  return any;
}

class Builder {
 public:
  Builder(std::string group, Verdict certifies) : group_(std::move(group)), certifies_(certifies) {}

  Builder& add(std::string name, BigInt lhs, Relation rel, BigInt rhs, bool decisive = true) {
    out_.push_back({std::move(name), group_, certifies_, std::move(lhs), std::move(rhs), rel, decisive});
    return *this;
  }
  Builder& add(std::string name, std::uint64_t lhs, Relation rel, std::uint64_t rhs) {
    return add(std::move(name), BigInt(lhs), rel, BigInt(rhs));
  }
  // x (rel) y * sqrt(z), exact: unsquared when z is a perfect square.
  Builder& add_half_power(const std::string& name, const BigInt& x, Relation rel, const BigInt& y, const BigInt& z,
                          bool decisive = true) {
    if (mpz_perfect_square_p(z.get_mpz_t())) {
      BigInt root;
      mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
      return add(name, x, rel, y * root, decisive);
    }
    return add(name + ", squared", x * x, rel, y * y * z, decisive);
  }

  void append_to(std::vector<Inequality>& evidence) const {
    evidence.insert(evidence.end(), out_.begin(), out_.end());
  }

 private:
  std::string group_;
  Verdict certifies_;
  std::vector<Inequality> out_;
};

GuaranteeVerdict finish(std::vector<Inequality> evidence) {
  GuaranteeVerdict v;
  v.status = rederive(evidence);
  v.region = group_of(evidence, v.status);
  v.evidence = std::move(evidence);
  return v;
}

constexpr Relation kGt = Relation::kGreater;
constexpr Relation kGe = Relation::kGreaterEqual;
constexpr Relation kEq = Relation::kEqual;
constexpr Relation kLe = Relation::kLessEqual;

std::uint64_t tuple_lcm(const DivisorTuple& D) {
  std::uint64_t l = 1;
  for (std::uint64_t d : D.d) l = lcm_u64(l, d);
  return l;
}

void require_strict(const DivisorTuple& D) {
  if (D.relaxed && !D.is_antichain()) throw Error(ErrorCode::kInvalidTuple, D.to_string() + " is not an antichain");
  if (D.d.empty()) throw Error(ErrorCode::kInvalidTuple, "empty divisor tuple");
}

void pairwise_coprime(Builder& b, const DivisorTuple& D) {
  for (std::size_t i = 0; i < D.k(); ++i) {
    for (std::size_t j = i + 1; j < D.k(); ++j) {
      b.add("gcd(d" + std::to_string(i + 1) + ", d" + std::to_string(j + 1) + ")", gcd_u64(D.d[i], D.d[j]), kEq, 1);
    }
  }
}

}  // namespace

Verdict rederive(const std::vector<Inequality>& evidence) {
  Verdict fallback = Verdict::kUnknown;
  for (const auto& g : group_order(evidence)) {
    Verdict v = Verdict::kUnknown;
    if (!group_holds(evidence, g, &v)) continue;
    if (is_certified(v)) return v;
    if (fallback == Verdict::kUnknown) fallback = v;
  }
  return fallback;
}

std::string group_of(const std::vector<Inequality>& evidence, Verdict v) {
  if (v == Verdict::kUnknown) return "none";
  for (const auto& g : group_order(evidence)) {
    Verdict got = Verdict::kUnknown;
    if (group_holds(evidence, g, &got) && got == v) return g;
  }
  return "none";
}

GuaranteeVerdict thm1_condition(std::uint64_t q, std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "the single-norm condition needs n >= 2");
  const BigInt W = w_exact(xn_shape(q, n));
  const BigInt L = norm_exponent(q, n, 1);
  const BigInt qn = ipow(BigInt(q), n);
  const WBoundParams wp = w_bound_params(q);
  std::vector<Inequality> ev;
  constexpr Verdict kT1 = Verdict::kCertifiedThm1;

  Builder("character sum bound", kT1)
      .add_half_power("fiber size > W q^(n/2)", L, kGt, W, qn)
      .add_half_power("fiber size > 2^n q^(n/2)", L, kGt, ipow(BigInt(2), n), qn, false)
      .add_half_power("fiber size^b > 2^(n+a) q^(nb/2)", ipow(L, wp.b), kGt, ipow(BigInt(2), n + wp.a),
                      ipow(qn, wp.b), false)
      .append_to(ev);
  Builder("large degree region", kT1).add("n", n, kGe, 7).append_to(ev);
  Builder("large field region", kT1).add("n", n, kGe, 3).add("n", n, kLe, 7).add("q", q, kGe, 64).append_to(ev);
  Builder("computational search region", kT1)
      .add("n", n, kGe, 3)
      .add("n", n, kLe, 7)
      .add("q", q, Relation::kLess, 64)
      .append_to(ev);
  Builder("quadratic fiber count", kT1).add("n", n, kEq, 2).add("fiber size q + 1", q + 1, kGt, 4).append_to(ev);
  Builder("quadratic single norm value", kT1).add("n", n, kEq, 2).add("q - 1", q - 1, kEq, 1).append_to(ev);
  Builder("quadratic exception", Verdict::kKnownException).add("n", n, kEq, 2).add("q", q, kEq, 3).append_to(ev);
  return finish(std::move(ev));
}

GuaranteeVerdict thm2_condition(std::uint64_t q, const DivisorTuple& D, bool with_w_bound) {
  require_strict(D);
  const BigInt W = w_exact(xn_shape(q, D.n));
  const BigInt g = fiber_count(q, D);
  const BigInt qn = ipow(BigInt(q), D.n);
  const WBoundParams wp = w_bound_params(q);
  std::vector<Inequality> ev;
  Builder("coset bound", Verdict::kCertifiedThm2).add_half_power("fiber size >= W q^(n/2)", g, kGe, W, qn).append_to(ev);
  Builder("coset bound with W estimate", Verdict::kCertifiedThm2)
      .add_half_power("fiber size^b >= 2^(n+a) q^(nb/2)", ipow(g, wp.b), kGe, ipow(BigInt(2), D.n + wp.a),
                      ipow(qn, wp.b), with_w_bound)
      .append_to(ev);
  return finish(std::move(ev));
}

GuaranteeVerdict thm3_condition(const DivisorTuple& D) {
  require_strict(D);
  std::vector<Inequality> ev;
  Builder("lcm below n", Verdict::kCertifiedThm3)
      .add("k", D.k(), kGe, 2)
      .add("n > lcm(d)", D.n, kGt, tuple_lcm(D))
      .append_to(ev);
  return finish(std::move(ev));
}

GuaranteeVerdict thm4_condition(std::uint64_t q, const DivisorTuple& D) {
  (void)q;
  require_strict(D);
  BigInt product = 1;
  for (std::uint64_t d : D.d) product *= d;
  std::vector<Inequality> ev;
  {
    Builder b("coprime, k >= 3", Verdict::kCertifiedThm4);
    pairwise_coprime(b, D);
    b.add("product of d", product, kEq, BigInt(D.n)).add("k", D.k(), kGe, 3).append_to(ev);
  }
  {
    Builder b("coprime pair, d1 >= 7", Verdict::kCertifiedThm4);
    pairwise_coprime(b, D);
    b.add("product of d", product, kEq, BigInt(D.n)).add("k", D.k(), kEq, 2).add("d1", D.d[0], kGe, 7).append_to(ev);
  }
  {
    // 1/2 > 1/d1 + 1/d2 - 1/(d1 d2), cleared of denominators.
    Builder b("coprime pair, large q", Verdict::kAsymptoticOnly);
    pairwise_coprime(b, D);
    b.add("product of d", product, kEq, BigInt(D.n)).add("k", D.k(), kEq, 2);
    if (D.k() == 2) {
      b.add("d1", D.d[0], kLe, 6).add("d1 d2 > 2(d1 + d2 - 1)", D.d[0] * D.d[1], kGt, 2 * (D.d[0] + D.d[1] - 1));
    }
    b.append_to(ev);
  }
  if (product < D.n) {
    Builder b("coprime, product below n", Verdict::kUnknown);
    pairwise_coprime(b, D);
    b.add("product of d", product, Relation::kLess, BigInt(D.n), false);
    b.append_to(ev);
    const auto t3 = thm3_condition(D);
    ev.insert(ev.end(), t3.evidence.begin(), t3.evidence.end());
  }
  return finish(std::move(ev));
}

CoprimeReduction reduce_to_coprime(const BigInt& q, std::uint64_t d1, std::uint64_t d2) {
  if (d1 == 0 || d2 == 0) throw Error(ErrorCode::kInvalidArgument, "degrees must be positive");
  const std::uint64_t g = gcd_u64(d1, d2);
  return {ipow(q, g), g, d1 / g, d2 / g};
}

GuaranteeVerdict classify(std::uint64_t q, const DivisorTuple& D) {
  require_strict(D);
  if (D.k() == 1) {
    if (D.d[0] == 1) return thm1_condition(q, D.n);
    return thm2_condition(q, D);
  }
  std::vector<Inequality> ev;
  std::vector<Verdict> later;
  bool decided = false;
  for (int step = 0; step < 3; ++step) {
    const GuaranteeVerdict v = step == 0 ? thm3_condition(D) : step == 1 ? thm4_condition(q, D) : thm2_condition(q, D);
    if (decided) {
      if (is_certified(v.status)) later.push_back(v.status);
      continue;
    }
    ev.insert(ev.end(), v.evidence.begin(), v.evidence.end());
    decided = is_certified(v.status);
  }
  GuaranteeVerdict out = finish(std::move(ev));
  for (Verdict v : later) {
    if (v != out.status && std::find(out.also.begin(), out.also.end(), v) == out.also.end()) out.also.push_back(v);
  }
  return out;
}

}  // namespace prenorm
