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


#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "prenorm/cli.hpp"

namespace prenorm {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  std::vector<nlohmann::json> records() const {
    std::vector<nlohmann::json> recs;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) recs.push_back(nlohmann::json::parse(line));
    return recs;
  }
  nlohmann::json first() const { return records().at(0); }
};

Run run(const std::string& line) {
  std::vector<std::string> args;
  std::istringstream in(line);
  for (std::string tok; in >> tok;) args.push_back(tok);
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, FieldInfo) {
  auto r = run("field-info 2 6");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.first();
  EXPECT_EQ(j["W"], "4");
  EXPECT_EQ(j["normal_count"], "24");
  EXPECT_EQ(j["W_bound"], "2^4");
  EXPECT_TRUE(j["W_within_bound"].get<bool>());

  j = run("field-info 3 2").first();
  EXPECT_EQ(j["normal_count"], "4");
  EXPECT_EQ(j["modulus"], "x^2+1");

  r = run("field-info 2 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.first()["normal_count"], "1");

  j = run("field-info 4 3").first();
  EXPECT_EQ(j["s"], 2);
  EXPECT_EQ(j["base_modulus"], "x^2+x+1");
}

TEST(Cli, Classify) {
  EXPECT_EQ(run("classify 2 12 --divisors 2,3").first()["status"], "CertifiedThm3");
  EXPECT_EQ(run("classify 5 12 --divisors 3,4").first()["status"], "Unknown");
  const auto j = run("classify 2 56 --divisors 7,8").first();
  EXPECT_EQ(j["status"], "CertifiedThm4");
  EXPECT_EQ(j["also"], nlohmann::json::array({"CertifiedThm2"}));
  EXPECT_EQ(run("classify 3 2 --divisors 1").first()["status"], "KnownException");
  const auto b = run("classify 64 3 --divisors 1").first();
  EXPECT_EQ(b["status"], "CertifiedThm1");
  bool boundary = false;
  for (const auto& e : b["evidence"]) {
    if (e["lhs"] == "4161" && e["rhs"] == "4096" && e["holds"].get<bool>()) boundary = true;
  }
  EXPECT_TRUE(boundary);
  EXPECT_EQ(run("classify 6 2 --divisors 1").code, kExitUsage);
  EXPECT_EQ(run("classify 2 12 --divisors 2,4").code, kExitUsage);
}

TEST(Cli, SearchExamples) {
  auto r = run("search 3 2 --norms 1=1");
  EXPECT_EQ(r.code, kExitAbsent);
  EXPECT_EQ(r.first()["status"], "NotFound");

  r = run("search 3 2 --norms 1=-1");
  EXPECT_EQ(r.code, kExitOk);

  r = run("search 2 30 --divisors 2,3,5 --norms 1,1,1");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.first()["verdict"], "CertifiedThm4");
  EXPECT_TRUE(r.first().contains("witness"));

  r = run("search 2 6 --norms 2=g^21,3=g^9");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.first()["witness_power"], "g^43");

  // The fiber over (1, 1) is F_4^*, which holds no normal element of F_64.
  r = run("search 2 6 --norms 2=1,3=1");
  EXPECT_EQ(r.code, kExitAbsent);
}

TEST(Cli, SearchFormsAgree) {
  const auto a = run("search 4 3 --norms 1=g^21");
  const auto b = run("search 4 3 --divisors 1 --norms g^21");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto vec = run("search 4 3 --norms 1=" + a.first()["A"][0].get<std::string>());
  EXPECT_EQ(vec.first()["witness"], a.first()["witness"]);
}

TEST(Cli, InadmissibleAndUsage) {
  // In F_729, g^91 and g^28 generate F_9^* and F_27^*. Their norms to F_3 are
  // g^364 = -1, while g^56 has norm g^728 = 1.
  EXPECT_EQ(run("admissible 3 6 --divisors 2,3 --norms g^91,g^28").code, kExitOk);
  auto r = run("admissible 3 6 --divisors 2,3 --norms g^91,g^56");
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("(1, 2)"), std::string::npos) << r.err;
  EXPECT_EQ(r.first()["violated"], nlohmann::json::array({1, 2}));

  EXPECT_EQ(run("search 2 6 --divisors 2,3 --norms g^21,g^10").code, kExitUsage);
  EXPECT_EQ(run("search 2 6").code, kExitUsage);
  EXPECT_EQ(run("bogus 2 6").code, kExitUsage);
  EXPECT_EQ(run("field-info 2").code, kExitUsage);
  EXPECT_EQ(run("search 2 6 --norms 2=1,3=1 --format xml").code, kExitUsage);
  EXPECT_EQ(run("verify nothing").code, kExitUsage);
}

TEST(Cli, Inconclusive) {
  const auto r = run("search 2 30 --divisors 2,3,5 --norms 1,1,1 --budget 1");
  EXPECT_EQ(r.code, kExitInconclusive) << r.out;
}

TEST(Cli, RandomStrategyIsSeeded) {
  const auto a = run("search 2 20 --norms 1=1 --strategy random --seed 7");
  const auto b = run("search 2 20 --norms 1=1 --strategy random --seed 7");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, JobsDoNotChangeOutput) {
  for (const std::string line : {"search 2 30 --divisors 2,3,5 --norms 1,1,1", "search 3 8 --divisors 2 --norms g^80",
                                 "verify thm1 --budget 1024", "verify lemma1 --budget 512"}) {
    const auto one = run(line + " --jobs 1");
    const auto four = run(line + " --jobs 4");
    EXPECT_EQ(one.code, four.code) << line;
    EXPECT_EQ(one.out, four.out) << line;
  }
}

TEST(Cli, Count) {
  const auto j = run("count 2 6 --divisors 2,3").first();
  EXPECT_EQ(j["fiber_count"], "3");
  EXPECT_EQ(j["admissible_tuples"], "21");
  const auto e = run("count 2 6 --norms 2=g^21,3=g^9").first();
  EXPECT_EQ(e["exhaustive_count"], 3);
  EXPECT_EQ(e["normal_count"], 1);
}

TEST(Cli, CharSum) {
  const auto r = run("charsum 2 6 --norms 2=g^21,3=g^9");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.first();
  EXPECT_LE(j["max_abs"].get<double>(), j["bound"].get<double>() + 1e-9);
  EXPECT_EQ(run("charsum 2 6 --norms 2=g^21,3=g^9 --twist 1").first()["twist"], "g^0");
  EXPECT_EQ(run("charsum 2 30 --norms 1=1").code, kExitInconclusive);
}

TEST(Cli, Verify) {
  const auto r = run("verify lemma1 --budget 65536");
  EXPECT_EQ(r.code, 0);
  const auto recs = r.records();
  EXPECT_TRUE(recs.back()["pass"].get<bool>());
  // The (3, 2) flag is reported, not hidden.
  bool flagged = false;
  for (const auto& rec : run("verify thm1 --budget 81").records()) {
    if (rec.contains("flag")) flagged = true;
  }
  EXPECT_TRUE(flagged);
}

TEST(Cli, TsvFormat) {
  const auto r = run("classify 2 12 --divisors 2,3 --format tsv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("#command\tq\tn", 0), 0u) << r.out;
}

TEST(Cli, PrescriptionFile) {
  const std::string path = ::testing::TempDir() + "/prescription.json";
  {
    std::ofstream f(path);
    f << R"({"q": 2, "n": 6, "divisors": [2, 3], "norms": ["g^21", "g^9"]})";
  }
  const auto r = run("search --prescription " + path);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.first()["witness_power"], "g^43");
  std::remove(path.c_str());
  EXPECT_EQ(run("search --prescription /nonexistent.json").code, kExitUsage);
}

}  // namespace
}  // namespace prenorm
