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


#include "prenorm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "prenorm/char_sums.hpp"
#include "prenorm/guarantees.hpp"
#include "prenorm/oracle.hpp"
#include "prenorm/text.hpp"

namespace prenorm {
namespace {

struct Options {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::string divisors;
  std::vector<std::string> norms;
  std::string prescription;
  std::string twist;
  std::string suite;
  std::string strategy = "scan";
  std::optional<std::uint64_t> budget;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::string format = "records";
  bool relaxed = false;
};

class Emitter {
 public:
  Emitter(std::ostream& out, std::string format) : out_(out), format_(std::move(format)) {}

  void operator()(const Record& rec) {
    if (format_ == "records") {
      out_ << rec.dump() << '\n';
      return;
    }
    std::vector<std::string> keys;
    for (const auto& [k, v] : rec.items()) keys.push_back(k);
    if (keys != header_) {
      header_ = keys;
      out_ << '#';
      for (std::size_t i = 0; i < keys.size(); ++i) out_ << (i ? "\t" : "") << keys[i];
      out_ << '\n';
    }
    bool first = true;
    for (const auto& [k, v] : rec.items()) {
      out_ << (first ? "" : "\t") << (v.is_string() ? v.get<std::string>() : v.dump());
      first = false;
    }
    out_ << '\n';
  }

 private:
  std::ostream& out_;
  std::string format_;
  std::vector<std::string> header_;
};

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& part : split_top_level(strip_spaces(text))) {
    const long long v = parse_int(part);
    if (v <= 0) throw Error(ErrorCode::kParse, "divisors must be positive");
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

// Norm arguments: "d=value" pairs, or bare values matched to --divisors.
struct NormSpec {
  std::vector<std::uint64_t> d;
  std::vector<std::string> values;
};

NormSpec parse_norms(const Options& o) {
  std::vector<std::string> items;
  for (const auto& arg : o.norms) {
    for (const auto& part : split_top_level(strip_spaces(arg))) items.push_back(part);
  }
  NormSpec spec;
  const bool keyed = !items.empty() && items[0].find('=') != std::string::npos;
  if (keyed) {
    std::vector<std::pair<std::uint64_t, std::string>> pairs;
    for (const auto& item : items) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::kParse, "mixing d=value and bare norm values");
      pairs.emplace_back(static_cast<std::uint64_t>(parse_int(item.substr(0, eq))), item.substr(eq + 1));
    }
    std::sort(pairs.begin(), pairs.end());
    for (auto& [d, v] : pairs) {
      spec.d.push_back(d);
      spec.values.push_back(v);
    }
    if (!o.divisors.empty() && parse_list(o.divisors) != spec.d) {
      throw Error(ErrorCode::kParse, "--divisors disagrees with the d=value norms");
    }
    return spec;
  }
  spec.values = items;
  if (!o.divisors.empty()) {
    spec.d = parse_list(o.divisors);
  } else if (items.size() == 1) {
    spec.d = {1};
  } else {
    throw Error(ErrorCode::kParse, "--divisors is required with several bare norm values");
  }
  if (!items.empty() && spec.d.size() != items.size()) throw Error(ErrorCode::kParse, "one norm value per divisor");
  return spec;
}

void load_prescription(Options& o) {
  if (o.prescription.empty()) return;
  std::ifstream in(o.prescription);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + o.prescription);
  const auto j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw Error(ErrorCode::kParse, o.prescription + " is not a JSON object");
  try {
    if (j.contains("q")) o.q = j.at("q").get<std::uint64_t>();
    if (j.contains("n")) o.n = j.at("n").get<std::uint64_t>();
    if (j.contains("divisors")) {
      std::string d;
      for (const auto& v : j.at("divisors")) d += (d.empty() ? "" : ",") + std::to_string(v.get<std::uint64_t>());
      o.divisors = d;
    }
    if (j.contains("norms")) {
      o.norms.clear();
      for (const auto& v : j.at("norms")) o.norms.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("prescription file: ") + e.what());
  }
}

Record head(const char* command, const Options& o) {
  Record r;
  r["command"] = command;
  r["q"] = o.q;
  r["n"] = o.n;
  return r;
}

Record verdict_record(const GuaranteeVerdict& v) {
  Record r;
  r["status"] = to_string(v.status);
  r["region"] = v.region;
  Record also = Record::array();
  for (Verdict a : v.also) also.push_back(to_string(a));
  r["also"] = also;
  Record ev = Record::array();
  for (const auto& e : v.evidence) {
    ev.push_back({{"group", e.group},
                  {"name", e.name},
                  {"lhs", to_decimal(e.lhs)},
                  {"relation", std::string(to_string(e.relation))},
                  {"rhs", to_decimal(e.rhs)},
                  {"holds", e.holds()},
                  {"decisive", e.decisive}});
  }
  r["evidence"] = ev;
  return r;
}

constexpr std::uint64_t kTableLimit = IndexedField::kDefaultBudget;

bool table_sized(std::uint64_t q, std::uint64_t n) { return ipow(BigInt(q), n) <= kTableLimit; }

std::string violated_text(const AdmissibilityReport& rep) {
  return "(" + std::to_string(rep.violated->first + 1) + ", " + std::to_string(rep.violated->second + 1) + ")";
}

Record violated_json(const AdmissibilityReport& rep) {
  if (!rep.violated) return nullptr;
  return Record::array({rep.violated->first + 1, rep.violated->second + 1});
}

int cmd_field_info(const Options& o, Emitter& emit) {
  const auto ctx = context_for(o.q, o.n);
  const auto fact = factor_xn_minus_1(*ctx);
  const BaseField& fq = ctx->base();
  Record r = head("field-info", o);
  r["p"] = fq.p();
  r["s"] = fq.s();
  if (fq.s() > 1) {
    const BaseField fp(fq.p(), 1);
    std::vector<Fq> m(fq.modulus().begin(), fq.modulus().end());
    r["base_modulus"] = pretty_poly(fp, FqPoly(m));
  }
  r["modulus"] = pretty_poly(fq, FqPoly(std::vector<Fq>(ctx->modulus().begin(), ctx->modulus().end())));
  Record factors = Record::array();
  for (const auto& f : fact.irreducibles()) factors.push_back({{"factor", pretty_poly(fq, f)}, {"multiplicity", fact.multiplicity()}});
  r["xn_minus_1"] = factors;
  r["W"] = to_decimal(w_exact(fact));
  const auto wb = w_bound(o.q, o.n);
  r["W_bound"] = wb.to_string();
  r["W_within_bound"] = wb.admits(w_exact(fact));
  r["normal_count"] = to_decimal(count_normal(fact));
  r["group_order"] = to_decimal(ctx->group_order());
  try {
    Record g = Record::array();
    for (const auto& f : ctx->group_order_factors()) g.push_back(to_decimal(f));
    r["group_order_factors"] = g;
    r["theta"] = format_element(*ctx, ctx->canonical_primitive());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kFactorizationTimeout) throw;
    r["group_order_factors"] = nullptr;
    r["theta"] = nullptr;
  }
  emit(r);
  return kExitOk;
}

DivisorTuple tuple_from(const Options& o, const NormSpec& spec) {
  return DivisorTuple::make(o.n, spec.d, o.relaxed);
}

int cmd_classify(const Options& o, Emitter& emit) {
  if (o.divisors.empty()) throw Error(ErrorCode::kParse, "--divisors is required");
  const auto D = DivisorTuple::make(o.n, parse_list(o.divisors));
  PrimePower::from_q(o.q);
  Record r = head("classify", o);
  r["D"] = tuple_json(D);
  const Record v = verdict_record(classify(o.q, D));
  for (const auto& [k, val] : v.items()) r[k] = val;
  emit(r);
  return kExitOk;
}

template <ExtensionField F>
Prescription<typename F::value_type> prescription_for(const F& field, const FieldContext& ctx, const DivisorTuple& D,
                                                      const NormSpec& spec) {
  Prescription<typename F::value_type> P{D, {}};
  for (const auto& v : spec.values) {
    const Element e = parse_element(ctx, v);
    if constexpr (std::is_same_v<F, IndexedField>) {
      P.A.push_back(field.from_element(e));
    } else {
      P.A.push_back(e);
    }
  }
  validate_prescription(field, P);
  return P;
}

template <ExtensionField F>
Element as_element(const F& field, const typename F::value_type& v) {
  if constexpr (std::is_same_v<F, IndexedField>) {
    return field.to_element(v);
  } else {
    return v;
  }
}

template <ExtensionField F>
int search_in(const F& field, const FieldContext& ctx, const Options& o, const NormSpec& spec, Emitter& emit,
              std::ostream& err) {
  const auto D = tuple_from(o, spec);
  auto P = prescription_for(field, ctx, D, spec);
  const auto fact = factor_xn_minus_1(ctx);
  Record r = head("search", o);
  r["D"] = tuple_json(D);
  Record A = Record::array();
  for (const auto& a : P.A) A.push_back(format_element(ctx, as_element(field, a)));
  r["A"] = A;
  const auto rep = check_admissible(field, P);
  r["admissible"] = rep.admissible;
  if (!rep.admissible) {
    r["violated"] = violated_json(rep);
    emit(r);
    err << "inadmissible prescription: pair " << violated_text(rep) << " violates the norm compatibility condition\n";
    return kExitUsage;
  }
  if (D.is_antichain()) {
    const auto v = classify(o.q, D);
    r["verdict"] = to_string(v.status);
    r["region"] = v.region;
  } else {
    r["verdict"] = nullptr;
  }
  SearchOptions opts;
  opts.jobs = o.jobs;
  if (o.budget) opts.scan_budget = *o.budget;
  int code = kExitOk;
  if (o.strategy == "random") {
    const auto res = random_prescribed_witness(field, fact, P, o.seed, opts.scan_budget);
    r["strategy"] = "random";
    r["seed"] = o.seed;
    r["samples"] = res.samples;
    r["status"] = res.found ? "Found" : "Inconclusive";
    if (res.found) {
      r["witness"] = format_element(ctx, as_element(field, res.witness));
      r["witness_power"] = "g^" + to_decimal(res.exponent);
    }
    code = res.found ? kExitOk : kExitInconclusive;
  } else {
    const auto res = find_normal_prescribed(field, fact, P, opts);
    r["strategy"] = "scan";
    r["fiber_count"] = to_decimal(res.fiber.count);
    r["scanned"] = to_decimal(res.scanned);
    r["status"] = std::string(to_string(res.status));
    if (res.status == SearchStatus::kFound) {
      r["witness"] = format_element(ctx, as_element(field, res.witness));
      r["witness_power"] = "g^" + to_decimal(res.exponent);
      r["j"] = to_decimal(res.j);
    }
    code = res.status == SearchStatus::kFound      ? kExitOk
           : res.status == SearchStatus::kNotFound ? kExitAbsent
                                                   : kExitInconclusive;
  }
  emit(r);
  return code;
}

int cmd_search(const Options& o, Emitter& emit, std::ostream& err) {
  const NormSpec spec = parse_norms(o);
  if (spec.values.empty()) throw Error(ErrorCode::kParse, "--norms is required");
  const auto ctx = context_for(o.q, o.n);
  if (table_sized(o.q, o.n)) {
    const IndexedField field(ctx);
    return search_in(field, *ctx, o, spec, emit, err);
  }
  return search_in(*ctx, *ctx, o, spec, emit, err);
}

int cmd_count(const Options& o, Emitter& emit) {
  Options local = o;
  NormSpec spec;
  if (!o.norms.empty()) {
    spec = parse_norms(local);
  } else {
    if (o.divisors.empty()) throw Error(ErrorCode::kParse, "--divisors or --norms is required");
    spec.d = parse_list(o.divisors);
  }
  PrimePower::from_q(o.q);
  const auto D = tuple_from(o, spec);
  Record r = head("count", o);
  r["D"] = tuple_json(D);
  const BigInt g = fiber_count(o.q, D);
  r["fiber_count"] = to_decimal(g);
  const auto coprime = fiber_count_coprime(o.q, D);
  r["fiber_count_coprime_formula"] = coprime ? Record(to_decimal(*coprime)) : Record(nullptr);
  r["admissible_tuples"] = to_decimal((ipow(BigInt(o.q), o.n) - 1) / g);
  const std::uint64_t limit = o.budget.value_or(std::uint64_t{1} << 20);
  if (!spec.values.empty() && ipow(BigInt(o.q), o.n) <= std::min(limit, kTableLimit)) {
    const SmallField field(o.q, o.n);
    auto P = prescription_for(field.idx(), field.ctx(), D, spec);
    const auto rep = check_admissible(field.idx(), P);
    const auto fib = exhaustive_fiber(field, P, limit);
    r["admissible"] = rep.admissible;
    r["exhaustive_count"] = fib.count;
    r["normal_count"] = fib.normal_count;
  }
  emit(r);
  return kExitOk;
}

int cmd_admissible(const Options& o, Emitter& emit, std::ostream& err) {
  const NormSpec spec = parse_norms(o);
  if (spec.values.empty()) throw Error(ErrorCode::kParse, "--norms is required");
  const auto ctx = context_for(o.q, o.n);
  const auto D = tuple_from(o, spec);
  auto P = prescription_for(*ctx, *ctx, D, spec);
  const auto rep = check_admissible(*ctx, P);
  Record r = head("admissible", o);
  r["D"] = tuple_json(D);
  r["admissible"] = rep.admissible;
  r["violated"] = violated_json(rep);
  emit(r);
  if (!rep.admissible) {
    err << "inadmissible prescription: pair " << violated_text(rep) << " violates the norm compatibility condition\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_charsum(const Options& o, Emitter& emit) {
  const NormSpec spec = parse_norms(o);
  if (spec.values.empty()) throw Error(ErrorCode::kParse, "--norms is required");
  const std::uint64_t limit = std::min(o.budget.value_or(std::uint64_t{1} << 16), kTableLimit);
  if (ipow(BigInt(o.q), o.n) > limit) throw Error(ErrorCode::kBudgetExceeded, "charsum needs q^n <= " + std::to_string(limit));
  const SmallField field(o.q, o.n);
  const IndexedField& f = field.idx();
  const auto D = tuple_from(o, spec);
  auto P = prescription_for(f, field.ctx(), D, spec);
  Record r = head("charsum", o);
  r["D"] = tuple_json(D);
  double M = 0;
  std::string arg;
  if (!o.twist.empty()) {
    const std::uint32_t c = f.from_element(parse_element(field.ctx(), o.twist));
    const auto s = coset_sum(f, P, c);
    M = std::abs(s.value);
    r["twist"] = power_form(f, c);
    r["sum_re"] = s.value.real();
    r["sum_im"] = s.value.imag();
  } else {
    for (std::uint32_t c = 1; c < f.count(); ++c) {
      const double v = std::abs(coset_sum(f, P, c).value);
      if (v > M) {
        M = v;
        arg = power_form(f, c);
      }
    }
    r["argmax_twist"] = arg;
  }
  const auto fib = exhaustive_fiber(field, P, f.count());
  const double bound = std::sqrt(static_cast<double>(f.count()));
  r["fiber_size"] = fib.count;
  r["max_abs"] = M;
  r["bound"] = bound;
  r["margin"] = bound - M;
  r["normal_count"] = fib.normal_count;
  r["normal_lower_bound"] = ns_lower_bound(fib.count, M, field.fact());
  emit(r);
  return kExitOk;
}

int cmd_verify(const Options& o, Emitter& emit) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + o.suite + "'");
  }
  const auto report = run_suite(o.suite, o.budget.value_or(4096), o.jobs, o.seed);
  for (const auto& rec : report.records) emit(rec);
  emit(report.summary());
  return report.passed() ? kExitOk : kExitFailure;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kDiscreteLogBudget:
    case ErrorCode::kFactorizationTimeout:
      return kExitInconclusive;
    case ErrorCode::kNotPrime:
    case ErrorCode::kDegreeZero:
    case ErrorCode::kNotADivisor:
    case ErrorCode::kNotInSubfield:
    case ErrorCode::kNotAdmissible:
    case ErrorCode::kInvalidTuple:
    case ErrorCode::kParse:
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

void common_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--budget", o.budget, "Work budget (elements scanned or field size)");
  cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  cmd->add_option("--seed", o.seed, "Seed for randomized steps");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"records", "tsv"}));
}

void field_args(CLI::App* cmd, Options& o) {
  cmd->add_option("q", o.q, "Base field size (prime power)")->required();
  cmd->add_option("n", o.n, "Extension degree")->required();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal elements with prescribed norms over finite fields", "prenorm"};
  app.require_subcommand(1);
  Options o;

  auto* info = app.add_subcommand("field-info", "Describe F_{q^n} and x^n - 1");
  field_args(info, o);
  common_flags(info, o);

  auto* search = app.add_subcommand("search", "Find a normal element with prescribed norms");
  search->add_option("q", o.q, "Base field size (prime power)");
  search->add_option("n", o.n, "Extension degree");
  search->add_option("--divisors", o.divisors, "Comma-separated d_1 < ... < d_k");
  search->add_option("--norms", o.norms, "Norm values: d=value pairs or one value per divisor");
  search->add_option("--prescription", o.prescription, "JSON file with q, n, divisors, norms");
  search->add_option("--strategy", o.strategy, "scan (ordered, exhaustive when small) or random")
      ->check(CLI::IsMember({"scan", "random"}));
  search->add_flag("--relaxed", o.relaxed, "Allow divisor tuples that are not antichains");
  common_flags(search, o);

  auto* cls = app.add_subcommand("classify", "Which sufficient condition certifies existence");
  field_args(cls, o);
  cls->add_option("--divisors", o.divisors, "Comma-separated d_1 < ... < d_k")->required();
  common_flags(cls, o);

  auto* count = app.add_subcommand("count", "Fiber size of the norm map");
  field_args(count, o);
  count->add_option("--divisors", o.divisors, "Comma-separated d_1 < ... < d_k");
  count->add_option("--norms", o.norms, "Norm values for an exhaustive count");
  count->add_flag("--relaxed", o.relaxed, "Allow divisor tuples that are not antichains");
  common_flags(count, o);

  auto* adm = app.add_subcommand("admissible", "Check the norm compatibility condition");
  field_args(adm, o);
  adm->add_option("--divisors", o.divisors, "Comma-separated d_1 < ... < d_k");
  adm->add_option("--norms", o.norms, "Norm values")->required();
  adm->add_flag("--relaxed", o.relaxed, "Allow divisor tuples that are not antichains");
  common_flags(adm, o);

  auto* cs = app.add_subcommand("charsum", "Additive character sums over a norm fiber");
  field_args(cs, o);
  cs->add_option("--divisors", o.divisors, "Comma-separated d_1 < ... < d_k");
  cs->add_option("--norms", o.norms, "Norm values")->required();
  cs->add_option("--twist", o.twist, "Single twist c (default: maximum over all c != 0)");
  common_flags(cs, o);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite, "Suite name")->required();
  common_flags(verify, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  Emitter emit(out, o.format);
  try {
    if (info->parsed()) return cmd_field_info(o, emit);
    if (cls->parsed()) return cmd_classify(o, emit);
    if (count->parsed()) return cmd_count(o, emit);
    if (adm->parsed()) return cmd_admissible(o, emit, err);
    if (cs->parsed()) return cmd_charsum(o, emit);
    if (verify->parsed()) return cmd_verify(o, emit);
    load_prescription(o);
    if (o.q == 0 || o.n == 0) throw Error(ErrorCode::kParse, "search needs q and n");
    return cmd_search(o, emit, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_for(e.code());
  }
}

}  // namespace prenorm
