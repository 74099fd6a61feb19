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


#include "prenorm/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "prenorm/char_sums.hpp"
#include "prenorm/parallel.hpp"

namespace prenorm {

std::vector<FieldSpec> fields_up_to(std::uint64_t budget, std::uint64_t min_n, std::uint64_t max_n) {
  std::vector<FieldSpec> out;
  for (std::uint64_t p = 2; p <= budget; ++p) {
    if (!is_prime_u64(p)) continue;
    std::uint64_t q = p;
    for (std::uint64_t s = 1; q <= budget; ++s, q *= p) {
      std::uint64_t size = 1;
      for (std::uint64_t n = 1; n <= max_n; ++n) {
        if (size > budget / q) break;
        size *= q;
        if (n >= min_n) out.push_back({p, s, n, q, size});
      }
      if (q > budget / p) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const FieldSpec& a, const FieldSpec& b) {
    return a.size != b.size ? a.size < b.size : a.q < b.q;
  });
  return out;
}

std::shared_ptr<const FieldContext> context_for(std::uint64_t q, std::uint64_t n) {
  const PrimePower pp = PrimePower::from_q(q);
  return build_context(pp.p, pp.s, n);
}

SmallField::SmallField(std::uint64_t q, std::uint64_t n, std::uint64_t budget)
    : ctx_(context_for(q, n)),
      idx_(std::make_unique<IndexedField>(ctx_, budget)),
      fact_(std::make_unique<XnFactorization>(factor_xn_minus_1(*ctx_))) {}

const std::vector<std::uint8_t>& SmallField::normal(unsigned jobs) const {
  if (normal_.empty()) normal_ = normal_bitmap(*idx_, *fact_, jobs);
  return normal_;
}

std::string power_form(const IndexedField& f, std::uint32_t v) {
  if (v == 0) return "0";
  return "g^" + std::to_string(f.log(v));
}

Record tuple_json(const DivisorTuple& D) {
  Record out = Record::array();
  for (std::uint64_t d : D.d) out.push_back(d);
  return out;
}

namespace {

// N_{n/d} exponents reduced mod q^n - 1.
std::vector<std::uint64_t> norm_exponents(const IndexedField& f, const DivisorTuple& D) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d : D.d) out.push_back(to_u64(norm_exponent(f.q(), f.degree(), d) % f.group_order()));
  return out;
}

NormTuple tuple_of_power(const IndexedField& f, const std::vector<std::uint64_t>& exps, std::uint64_t k) {
  NormTuple t;
  for (std::uint64_t e : exps) t.push_back(f.exp(mulmod_u64(k, e, f.group_order_u64())));
  return t;
}

Record tuple_record(const IndexedField& f, const NormTuple& t) {
  Record out = Record::array();
  for (std::uint32_t v : t) out.push_back(power_form(f, v));
  return out;
}

Record field_head(const SmallField& field) {
  Record r;
  r["q"] = field.ctx().q();
  r["n"] = field.ctx().degree();
  return r;
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t q, std::uint64_t n, std::uint64_t i) {
  std::uint64_t h = seed * 0x9E3779B97F4A7C15ULL;
  for (std::uint64_t v : {q, n, i}) h = (h ^ v) * 0x100000001B3ULL + 0x632BE59BD9B4E019ULL;
  return h;
}

}  // namespace

std::map<NormTuple, std::uint64_t> norm_histogram(const IndexedField& f, const DivisorTuple& D) {
  const auto exps = norm_exponents(f, D);
  const std::uint64_t order = f.group_order_u64();
  std::vector<std::uint64_t> acc(exps.size(), 0);
  std::map<NormTuple, std::uint64_t> hist;
  NormTuple key(exps.size());
  for (std::uint64_t k = 0; k < order; ++k) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      key[i] = f.exp(acc[i]);
      acc[i] += exps[i];
      if (acc[i] >= order) acc[i] -= order;
    }
    ++hist[key];
  }
  return hist;
}

FiberReport exhaustive_fiber(const SmallField& field, const Prescription<std::uint32_t>& P, std::uint64_t budget) {
  const IndexedField& f = field.idx();
  if (f.count() > budget) throw Error(ErrorCode::kBudgetExceeded, "field has more than " + std::to_string(budget) + " elements");
  validate_prescription(f, P);
  const auto exps = norm_exponents(f, P.D);
  const auto& normal = field.normal();
  FiberReport out;
  for (std::uint64_t k = 0; k < f.group_order_u64(); ++k) {
    if (tuple_of_power(f, exps, k) != P.A) continue;
    const std::uint32_t v = f.exp(k);
    out.elements.push_back(v);
    out.normal_count += normal[v];
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.count = out.elements.size();
  return out;
}

namespace {

// N_{n/1} of every normal element, in canonical order.
std::vector<Fq> normal_norms(const SmallField& field, unsigned jobs) {
  const IndexedField& f = field.idx();
  const auto& normal = field.normal(jobs);
  const std::uint64_t order = f.group_order_u64();
  const std::uint64_t L = order / (f.q() - 1);
  std::vector<Fq> out;
  for (std::uint64_t v = 1; v < f.count(); ++v) {
    if (normal[v]) out.push_back(f.exp(mulmod_u64(f.log(static_cast<std::uint32_t>(v)), L, order)));
  }
  return out;
}

}  // namespace

Thm1Report verify_thm1(const SmallField& field, unsigned jobs) {
  Thm1Report r;
  r.q = field.ctx().q();
  r.n = field.ctx().degree();
  std::vector<bool> hit(r.q, false);
  const auto norms = normal_norms(field, jobs);
  for (Fq a : norms) hit[a] = true;
  r.normal_count = norms.size();
  for (Fq a = 1; a < r.q; ++a) (hit[a] ? r.achieved : r.missed).push_back(a);
  if (r.q == 3 && r.n == 2) r.stated_missed = {2};
  r.agrees_with_statement = r.missed == r.stated_missed;
  return r;
}

Thm1Report verify_thm1(std::uint64_t q, std::uint64_t n, std::uint64_t budget, unsigned jobs) {
  const SmallField field(q, n, budget);
  return verify_thm1(field, jobs);
}

Record to_record(const Thm1Report& r, const BaseField& fq) {
  auto list = [&](const std::vector<Fq>& v) {
    Record a = Record::array();
    for (Fq c : v) a.push_back(fq.s() == 1 ? std::to_string(c) : format_fq(fq, c));
    return a;
  };
  Record out;
  out["q"] = r.q;
  out["n"] = r.n;
  out["normal_count"] = r.normal_count;
  out["achieved"] = list(r.achieved);
  out["missed"] = list(r.missed);
  out["stated_missed"] = list(r.stated_missed);
  out["agrees_with_statement"] = r.agrees_with_statement;
  return out;
}

bool appendix_certificate(const SmallField& field, unsigned jobs) {
  const BaseField& fq = field.ctx().base();
  const std::size_t m = field.ctx().q() - 1;
  // prod (x - b) reduced mod x^m - 1, coefficients of x^0 .. x^{m-1}.
  std::vector<Fq> r(m, 0), next(m);
  r[0] = 1;
  for (Fq b : normal_norms(field, jobs)) {
    for (std::size_t i = 0; i < m; ++i) next[i] = fq.sub(r[(i + m - 1) % m], fq.mul(b, r[i]));
    r.swap(next);
  }
  return std::all_of(r.begin(), r.end(), [](Fq c) { return c == 0; });
}

bool appendix_certificate(std::uint64_t q, std::uint64_t n, std::uint64_t budget, unsigned jobs) {
  const auto size = ipow(BigInt(q), n);
  if (size > budget) throw Error(ErrorCode::kBudgetExceeded, "q^n exceeds " + std::to_string(budget));
  const SmallField field(q, n);
  return appendix_certificate(field, jobs);
}

N2Report n2_fiber_analysis(std::uint64_t q, std::uint64_t budget) {
  const SmallField field(q, 2, budget);
  const IndexedField& f = field.idx();
  const auto& normal = field.normal();
  N2Report r;
  r.q = q;
  r.rows.resize(q - 1);
  for (Fq b = 1; b < q; ++b) r.rows[b - 1].b = b;
  const std::uint64_t order = f.group_order_u64();
  for (std::uint64_t v = 1; v < f.count(); ++v) {
    const Fq b = f.exp(mulmod_u64(f.log(static_cast<std::uint32_t>(v)), q + 1, order));
    ++r.rows[b - 1].size;
    if (!normal[v]) ++r.rows[b - 1].non_normal;
  }
  for (const auto& row : r.rows) {
    r.sizes_ok = r.sizes_ok && row.size == q + 1;
    r.at_most_four = r.at_most_four && row.non_normal <= 4;
    r.every_norm_hit = r.every_norm_hit && row.non_normal < row.size;
  }
  return r;
}

Record lemma1_instance(const SmallField& field, const DivisorTuple& D, std::uint64_t seed,
                       std::uint64_t exhaustive_limit, std::uint64_t samples) {
  const IndexedField& f = field.idx();
  const auto hist = norm_histogram(f, D);
  const BigInt g = fiber_count(f.q(), D);
  const auto exps = norm_exponents(f, D);
  const std::uint64_t order = f.group_order_u64();
  Record rec = field_head(field);
  rec["D"] = tuple_json(D);
  rec["fiber_count"] = to_decimal(g);
  rec["realized"] = hist.size();
  Record bad = Record::array();
  auto admissible = [&](const NormTuple& t) {
    Prescription<std::uint32_t> P{D, t};
    return check_admissible(f, P).admissible;
  };
  auto check = [&](const NormTuple& t, const char* what) {
    const auto it = hist.find(t);
    const std::uint64_t count = it == hist.end() ? 0 : it->second;
    const bool adm = admissible(t);
    if (adm != (count > 0) || (count > 0 && BigInt(count) != g)) {
      bad.push_back({{"check", what}, {"A", tuple_record(f, t)}, {"count", count}, {"admissible", adm}});
    }
  };
  for (const auto& [t, count] : hist) check(t, "realized");

  BigInt space = 1;
  std::vector<std::uint64_t> sizes;
  for (std::uint64_t d : D.d) {
    sizes.push_back(to_u64(ipow(BigInt(f.q()), d) - 1));
    space *= sizes.back();
  }
  std::uint64_t checked = hist.size();
  if (space <= exhaustive_limit) {
    rec["mode"] = "exhaustive";
    std::uint64_t admissible_count = 0;
    std::vector<std::uint64_t> pos(D.k(), 0);
    for (;;) {
      NormTuple t;
      for (std::size_t i = 0; i < D.k(); ++i) t.push_back(f.exp(mulmod_u64(pos[i], exps[i], order)));
      admissible_count += admissible(t);
      check(t, "enumerated");
      ++checked;
      std::size_t i = 0;
      while (i < D.k() && ++pos[i] == sizes[i]) pos[i++] = 0;
      if (i == D.k()) break;
    }
    if (admissible_count != hist.size()) {
      bad.push_back({{"check", "admissible count"}, {"admissible", admissible_count}, {"realized", hist.size()}});
    }
  } else {
    rec["mode"] = "sampled";
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
      check(tuple_of_power(f, exps, uniform_below(rng, order)), "sampled admissible");
      NormTuple t;
      for (std::size_t j = 0; j < D.k(); ++j) t.push_back(f.exp(mulmod_u64(uniform_below(rng, sizes[j]), exps[j], order)));
      check(t, "sampled uniform");
      checked += 2;
    }
  }
  rec["tuples_checked"] = checked;
  rec["pass"] = bad.empty();
  rec["counterexamples"] = bad;
  return rec;
}

Record soundness_instance(const SmallField& field, const DivisorTuple& D, const GuaranteeVerdict& verdict, bool search,
                          unsigned jobs) {
  const IndexedField& f = field.idx();
  const auto& normal = field.normal(jobs);
  const std::uint64_t order = f.group_order_u64();
  const std::uint64_t fibers = order / to_u64(fiber_count(f.q(), D));
  const auto exps = norm_exponents(f, D);
  std::vector<std::uint8_t> covered(fibers, 0);
  for (std::uint64_t v = 1; v < f.count(); ++v) {
    if (normal[v]) covered[f.log(static_cast<std::uint32_t>(v)) % fibers] = 1;
  }
  Record rec = field_head(field);
  rec["D"] = tuple_json(D);
  rec["verdict"] = to_string(verdict.status);
  rec["region"] = verdict.region;
  rec["admissible_tuples"] = fibers;
  Record bad = Record::array();
  std::uint64_t uncovered = 0;
  for (std::uint64_t r = 0; r < fibers; ++r) {
    if (covered[r]) continue;
    ++uncovered;
    if (bad.size() < 16) bad.push_back({{"check", "no normal preimage"}, {"A", tuple_record(f, tuple_of_power(f, exps, r))}});
  }
  rec["uncovered"] = uncovered;
  if (search) {
    SearchOptions opts;
    opts.jobs = jobs;
    std::uint64_t mismatches = 0;
    for (std::uint64_t r = 0; r < fibers; ++r) {
      Prescription<std::uint32_t> P{D, tuple_of_power(f, exps, r)};
      const auto res = find_normal_prescribed(f, field.fact(), P, opts);
      bool ok = (res.status == SearchStatus::kFound) == (covered[r] != 0);
      if (res.status == SearchStatus::kFound) {
        ok = ok && normal[res.witness] && tuple_of_power(f, exps, f.log(res.witness)) == P.A;
      }
      if (!ok) {
        ++mismatches;
        if (bad.size() < 32) {
          bad.push_back({{"check", "search"}, {"A", tuple_record(f, P.A)}, {"status", to_string(res.status)}});
        }
      }
    }
    rec["search_mismatches"] = mismatches;
  }
  rec["pass"] = bad.empty();
  rec["counterexamples"] = bad;
  return rec;
}

Record charsum_instance(const SmallField& field, const DivisorTuple& D) {
  const IndexedField& f = field.idx();
  const auto& normal = field.normal();
  const std::uint64_t order = f.group_order_u64();
  const std::uint64_t g = to_u64(fiber_count(f.q(), D));
  const std::uint64_t fibers = order / g;
  const auto exps = norm_exponents(f, D);
  const double bound = std::sqrt(static_cast<double>(f.count()));
  Record rec = field_head(field);
  rec["D"] = tuple_json(D);
  rec["fibers"] = fibers;
  Record bad = Record::array();
  double worst = 0;
  std::uint64_t informative = 0;
  std::vector<std::uint32_t> members(g);
  for (std::uint64_t r = 0; r < fibers; ++r) {
    std::uint64_t normals = 0;
    for (std::uint64_t j = 0; j < g; ++j) {
      members[j] = f.exp(r + j * fibers);
      normals += normal[members[j]];
    }
    double M = 0;
    for (std::uint32_t c = 1; c < f.count(); ++c) {
      RootTally t(f.p());
      for (std::uint32_t x : members) t.add(f.abs_trace(f.mul(c, x)));
      M = std::max(M, std::abs(t.value()));
    }
    // Same sum through the solver path, one twist per fiber.
    Prescription<std::uint32_t> P{D, tuple_of_power(f, exps, r)};
    RootTally direct(f.p());
    for (std::uint32_t x : members) direct.add(f.abs_trace(x));
    if (coset_sum(f, P, 1u).tally.counts() != direct.counts()) {
      bad.push_back({{"check", "coset_sum path"}, {"A", tuple_record(f, P.A)}});
    }
    worst = std::max(worst, M);
    if (M > bound + 1e-6 && bad.size() < 16) {
      bad.push_back({{"check", "coset bound"}, {"A", tuple_record(f, P.A)}, {"max_abs", M}});
    }
    const double lower = ns_lower_bound(g, M, field.fact());
    if (lower >= 0) {
      ++informative;
      if (!(static_cast<double>(normals) > lower) && bad.size() < 16) {
        bad.push_back({{"check", "normal count bound"}, {"A", tuple_record(f, P.A)}, {"normals", normals}, {"bound", lower}});
      }
    }
  }
  rec["max_abs"] = worst;
  rec["bound"] = bound;
  rec["margin"] = bound - worst;
  rec["informative_fibers"] = informative;
  rec["pass"] = bad.empty();
  rec["counterexamples"] = bad;
  return rec;
}

Record SuiteReport::summary() const {
  Record r;
  r["suite"] = suite;
  r["budget"] = budget;
  r["checked"] = checked;
  r["failed"] = failed;
  r["pass"] = passed();
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> kNames = {"lemma1",   "thm1",      "thm2_soundness", "thm3_soundness",
                                                  "thm4_soundness", "indicator", "charsum",        "appendix",
                                                  "lambda_count",   "n2"};
  return kNames;
}

namespace {

using InstanceFn = std::vector<Record> (*)(const FieldSpec&, std::uint64_t seed, unsigned jobs);

std::vector<Record> suite_lemma1(const FieldSpec& fs, std::uint64_t seed, unsigned) {
  const SmallField field(fs.q, fs.n);
  std::vector<Record> out;
  std::uint64_t i = 0;
  for (const auto& D : enumerate_tuples(fs.n, 3)) out.push_back(lemma1_instance(field, D, instance_seed(seed, fs.q, fs.n, i++)));
  return out;
}

std::vector<Record> suite_thm1(const FieldSpec& fs, std::uint64_t, unsigned jobs) {
  const SmallField field(fs.q, fs.n);
  const Thm1Report r = verify_thm1(field, jobs);
  Record rec = to_record(r, field.ctx().base());
  const bool exceptional = fs.q == 3 && fs.n == 2;
  rec["pass"] = exceptional ? r.missed.size() == 1 : r.missed.empty();
  if (exceptional) rec["flag"] = r.agrees_with_statement ? "exception as stated" : "exception value differs from statement";
  return {rec};
}

template <GuaranteeVerdict (*Condition)(std::uint64_t, const DivisorTuple&)>
std::vector<Record> suite_soundness(const FieldSpec& fs, std::uint64_t, unsigned jobs) {
  std::vector<Record> out;
  std::unique_ptr<SmallField> field;
  for (const auto& D : enumerate_tuples(fs.n, divisors(fs.n).size())) {
    const GuaranteeVerdict v = Condition(fs.q, D);
    if (!is_certified(v.status)) continue;
    if (!field) field = std::make_unique<SmallField>(fs.q, fs.n);
    out.push_back(soundness_instance(*field, D, v, false, jobs));
  }
  return out;
}

GuaranteeVerdict thm2_only(std::uint64_t q, const DivisorTuple& D) { return thm2_condition(q, D); }
GuaranteeVerdict thm3_only(std::uint64_t, const DivisorTuple& D) { return thm3_condition(D); }
GuaranteeVerdict thm4_only(std::uint64_t q, const DivisorTuple& D) { return thm4_condition(q, D); }

std::vector<Record> suite_indicator(const FieldSpec& fs, std::uint64_t, unsigned jobs) {
  const SmallField field(fs.q, fs.n);
  const IndexedField& f = field.idx();
  Record rec = field_head(field);
  Record bad = Record::array();
  double deviation = 0;
  try {
    const CharacterTable table(f, field.fact(), jobs, fs.size);
    for (std::uint32_t a = 0; a < f.count(); ++a) {
      const auto v = table.indicator(a);
      deviation = std::max(deviation, std::abs(v.raw - Complex(v.rounded, 0)));
      if ((v.rounded == 1) != is_normal_gcd(f, a) && bad.size() < 16) {
        bad.push_back({{"a", power_form(f, a)}, {"indicator", v.rounded}});
      }
    }
  } catch (const Error& e) {
    bad.push_back({{"error", e.what()}});
  }
  rec["max_deviation"] = deviation;
  rec["pass"] = bad.empty();
  rec["counterexamples"] = bad;
  return {rec};
}

std::vector<Record> suite_charsum(const FieldSpec& fs, std::uint64_t, unsigned) {
  const SmallField field(fs.q, fs.n);
  std::vector<Record> out;
  for (const auto& D : enumerate_tuples(fs.n, 3)) out.push_back(charsum_instance(field, D));
  return out;
}

std::vector<Record> suite_appendix(const FieldSpec& fs, std::uint64_t, unsigned jobs) {
  const SmallField field(fs.q, fs.n);
  const bool cert = appendix_certificate(field, jobs);
  const Thm1Report r = verify_thm1(field, jobs);
  Record rec = field_head(field);
  rec["certificate"] = cert;
  rec["all_norms_hit"] = r.missed.empty();
  rec["pass"] = cert == r.missed.empty();
  return {rec};
}

std::vector<Record> suite_lambda(const FieldSpec& fs, std::uint64_t, unsigned jobs) {
  const SmallField field(fs.q, fs.n);
  const CharacterTable table(field.idx(), field.fact(), jobs, fs.size);
  Record rec = field_head(field);
  Record bad = Record::array();
  std::uint64_t total = 0;
  field.fact().for_each_divisor([&](const DivisorExponents& e) {
    const auto size = table.lambda(e).size();
    total += size;
    const BigInt phi = arith_functions(field.fact(), e).phi;
    if (BigInt(size) != phi) {
      bad.push_back({{"f", pretty_poly(field.ctx().base(), field.fact().expand(e))}, {"size", size}, {"phi", to_decimal(phi)}});
    }
  });
  if (total != fs.size) bad.push_back({{"check", "character count"}, {"total", total}});
  rec["divisors"] = field.fact().divisor_count();
  rec["pass"] = bad.empty();
  rec["counterexamples"] = bad;
  return {rec};
}

std::vector<Record> suite_n2(const FieldSpec& fs, std::uint64_t, unsigned) {
  const N2Report r = n2_fiber_analysis(fs.q);
  Record rec;
  rec["q"] = fs.q;
  rec["n"] = 2;
  std::uint64_t worst = 0;
  for (const auto& row : r.rows) worst = std::max(worst, row.non_normal);
  rec["max_non_normal"] = worst;
  rec["sizes_ok"] = r.sizes_ok;
  rec["every_norm_hit"] = r.every_norm_hit;
  rec["pass"] = r.sizes_ok && r.at_most_four && (fs.q + 1 <= 4 || r.every_norm_hit);
  return {rec};
}

}  // namespace

SuiteReport run_suite(std::string_view name, std::uint64_t budget, unsigned jobs, std::uint64_t seed) {
  InstanceFn fn = nullptr;
  std::uint64_t min_n = 2;
  std::uint64_t max_n = std::uint64_t{1} << 32;
  if (name == "lemma1") fn = suite_lemma1;
  if (name == "thm1") fn = suite_thm1;
  if (name == "thm2_soundness") fn = suite_soundness<thm2_only>;
  if (name == "thm3_soundness") fn = suite_soundness<thm3_only>;
  if (name == "thm4_soundness") fn = suite_soundness<thm4_only>;
  if (name == "indicator") fn = suite_indicator, min_n = 1;
  if (name == "charsum") fn = suite_charsum;
  if (name == "appendix") fn = suite_appendix;
  if (name == "lambda_count") fn = suite_lambda, min_n = 1;
  if (name == "n2") fn = suite_n2, max_n = 2;
  if (!fn) throw Error(ErrorCode::kInvalidArgument, "unknown suite " + std::string(name));
  if (budget > IndexedField::kDefaultBudget) {
    throw Error(ErrorCode::kBudgetExceeded, "suite budget is capped at " + std::to_string(IndexedField::kDefaultBudget));
  }
  const auto fields = fields_up_to(budget, min_n, max_n);
  // Parallelism is across instances; the inner work runs single-threaded.
  const auto per_field = parallel_map<std::vector<Record>>(
      fields.size(), jobs, [&](std::uint64_t i) { return fn(fields[i], seed, 1); });
  SuiteReport report;
  report.suite = std::string(name);
  report.budget = budget;
  for (const auto& recs : per_field) {
    for (Record rec : recs) {
      Record out;
      out["suite"] = report.suite;
      for (auto& [k, v] : rec.items()) out[k] = v;
      ++report.checked;
      if (!out.value("pass", false)) ++report.failed;
      report.records.push_back(std::move(out));
    }
  }
  return report;
}

}  // namespace prenorm
