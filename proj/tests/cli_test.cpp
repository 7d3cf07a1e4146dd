/*
 * Copyright 2026 The measure-audit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "maudit/errors.hpp"
#include "maudit_cli/app.hpp"
#include "maudit_cli/io.hpp"
#include "maudit_cli/report.hpp"
#include "test_util.hpp"

namespace maudit::cli {
namespace {

using maudit::testing::M;
namespace fs = std::filesystem;

fs::path write_temp(const std::string& name, const std::string& body) {
  fs::path p = fs::path(MAUDIT_TEST_TMP) / "cli_inputs" / name;
  fs::create_directories(p.parent_path());
  std::ofstream(p) << body;
  return p;
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(LabelsCsv, RecountsExample) {
  LabeledPair p = parse_labels_csv("1,1\n1,1\n0,1\n");
  EXPECT_EQ(build_confusion(p.truth, p.pred), M({{0, 1}, {0, 2}}));
  EXPECT_EQ(p.alphabet, (std::vector<std::string>{"0", "1"}));
}

TEST(LabelsCsv, HeaderCommentsAndAlphabet) {
  LabelOptions opt;
  opt.alphabet = {"cat", "dog", "eel"};
  LabeledPair p = parse_labels_csv("true,pred\n# comment\n\ncat,dog\neel,eel\n", opt);
  EXPECT_EQ(p.truth.num_classes(), 3);
  EXPECT_EQ(build_confusion(p.truth, p.pred), M({{0, 1, 0}, {0, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(p.alphabet, opt.alphabet);
}

TEST(LabelsCsv, Errors) {
  EXPECT_THROW(parse_labels_csv("cat,dog\n"), InputError);
  LabelOptions opt;
  opt.alphabet = {"cat", "dog"};
  EXPECT_THROW(parse_labels_csv("cat,eel\n", opt), InputError);
  EXPECT_THROW(parse_labels_csv("1,1,1\n"), InputError);
  EXPECT_THROW(parse_labels_csv("-1,0\n"), InputError);
  EXPECT_THROW(parse_labels_csv(""), InputError);
}

TEST(MatrixJson, Parses) {
  EXPECT_EQ(parse_matrix_json("[[0,6],[6,0]]").binary(), BinaryCounts(0, 6, 6, 0));
  ConfusionMatrix c = parse_matrix_json(R"({"matrix": [["1/2", 1], [0, 0.25]]})");
  EXPECT_EQ(c(0, 0), Rational(1, 2));
  EXPECT_EQ(c(1, 1), Rational(1, 4));
  EXPECT_THROW(parse_matrix_json("[[1,2],[3]]"), InputError);
  EXPECT_THROW(parse_matrix_json("[[1,-2],[3,1]]"), InputError);
  EXPECT_THROW(parse_matrix_json("{"), InputError);
}

TEST(MatrixCsv, Parses) {
  EXPECT_EQ(parse_matrix_csv("3,1\n2,4\n"), M({{3, 1}, {2, 4}}));
  EXPECT_THROW(parse_matrix_csv("3,-1\n2,4\n"), InputError);
  EXPECT_THROW(parse_matrix_csv("3,1\n2\n"), InputError);
}

TEST(MatrixJson, RoundTrip) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 50; ++k) {
    ConfusionMatrix c = maudit::testing::random_matrix(rng, 2 + k % 3, 9);
    if (k % 2) c = c.scaled(Rational(2, 7));
    EXPECT_EQ(parse_matrix_json(matrix_to_json(c).dump()), c);
    EXPECT_EQ(matrix_from_json(matrix_to_json(c)), c);
  }
}

TEST(Formats, Names) {
  EXPECT_EQ(parse_input_format("matrix-csv"), InputFormat::MatrixCsv);
  EXPECT_FALSE(parse_input_format("xml").has_value());
  EXPECT_EQ(guess_format("a/b.json"), InputFormat::MatrixJson);
  EXPECT_EQ(guess_format("a/b.csv"), InputFormat::LabelsCsv);
  EXPECT_EQ(parse_output_format("md"), OutputFormat::Markdown);
  EXPECT_EQ(percent_string(96.54), "96.5");
  EXPECT_EQ(percent_string(0), "0.0");
}

TEST(Run, EvalMatrix) {
  fs::path m = write_temp("m.json", "[[3,1],[2,4]]");
  Result r = invoke({"eval", "--matrix", m.string(), "--measures", "acc,cc,sba", "--no-timestamp"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["results"].size(), 3u);
  EXPECT_EQ(doc["results"][0]["value"]["exact"], "7/10");
  EXPECT_EQ(doc["results"][0]["value"]["arithmetic"], "rational");
  EXPECT_EQ(doc["results"][1]["value"]["arithmetic"], "algebraic");
  EXPECT_FALSE(doc.contains("generated_at"));
}

TEST(Run, EvalLabelsRecordsAlphabet) {
  fs::path l = write_temp("l.csv", "true,pred\nno,yes\nyes,yes\nyes,yes\n");
  Result r = invoke({"eval", "--labels", l.string(), "--alphabet", "no,yes", "--no-timestamp"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["alphabet"], nlohmann::json::parse(R"(["no","yes"])"));
  EXPECT_EQ(doc["matrix"], nlohmann::json::parse("[[0,1],[0,2]]"));
}

TEST(Run, DeterministicBytes) {
  fs::path m = write_temp("d.json", "[[2,1,0],[0,3,1],[1,0,2]]");
  std::vector<std::string> args{"--format", "markdown", "eval", "--matrix", m.string(), "--no-timestamp"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  std::vector<std::string> audit{"audit", "--binary", "--measures", "cc,ba", "--n-max", "4", "--n-max-dist", "3",
                                 "--no-timestamp"};
  EXPECT_EQ(invoke(audit).out, invoke(audit).out);
}

TEST(Run, AuditGrid) {
  Result r = invoke({"audit", "--binary", "--measures", "acc,ce", "--properties", "max,min", "--n-max", "4",
                     "--no-timestamp"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["cells"].size(), 4u);
  EXPECT_EQ(doc["cells"][0]["status"], "satisfied");
  EXPECT_EQ(doc["cells"][3]["status"], "violated");
  EXPECT_TRUE(doc["cells"][3].contains("witness"));
  Result md = invoke({"--format", "markdown", "audit", "--binary", "--measures", "acc,ce", "--properties",
                      "max,min", "--n-max", "4", "--no-timestamp"});
  EXPECT_NE(md.out.find("| Acc"), std::string::npos) << md.out;
  EXPECT_NE(md.out.find("✗"), std::string::npos);
}

TEST(Run, DistinguishRows) {
  Result r = invoke({"distinguish", "--n", "2:3", "--no-timestamp"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["rows"].size(), 2u);
  EXPECT_EQ(doc["rows"][0]["groups"][0].size(), 8u);
  EXPECT_EQ(doc["rows"][1]["triplets"], 216);
}

TEST(Run, CompareAndRank) {
  fs::path a = write_temp("model_a.csv", "0,0\n0,0\n0,0\n1,0\n1,1\n");
  fs::path b = write_temp("model_b.csv", "0,1\n0,0\n0,1\n1,1\n1,1\n");
  Result c = invoke({"compare", a.string(), b.string(), "--measures", "acc,ba", "--no-timestamp"});
  ASSERT_EQ(c.code, kExitOk) << c.err;
  Result r = invoke({"--format", "csv", "rank", a.string(), b.string(), "--measures", "acc,ba", "--no-timestamp"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("model_a"), std::string::npos);
  fs::path bad = write_temp("model_c.csv", "1,0\n0,0\n0,1\n1,1\n1,1\n");
  EXPECT_EQ(invoke({"rank", a.string(), bad.string()}).code, kExitInputError);
}

TEST(Run, Baseline) {
  Result r = invoke({"baseline", "--a", "4,3", "--b", "2,5", "--measures", "cc,ba", "--check", "--no-timestamp"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_NE(r.out.find("\"1/2\""), std::string::npos) << r.out;
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(invoke({"eval", "--matrix", "/nonexistent/m.json"}).code, kExitInputError);
  fs::path m = write_temp("neg.csv", "1,-1\n0,2\n");
  EXPECT_EQ(invoke({"eval", "--matrix", m.string(), "--input-format", "matrix-csv"}).code, kExitInputError);
  fs::path ok = write_temp("ok.json", "[[1,0],[0,1]]");
  EXPECT_EQ(invoke({"eval", "--matrix", ok.string(), "--measures", "bogus"}).code, kExitInputError);
  EXPECT_EQ(invoke({"nosuchcommand"}).code, kExitInputError);
  EXPECT_EQ(invoke({"--budget", "10", "audit", "--binary", "--measures", "cc"}).code, kExitBudgetExceeded);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Run, BudgetFromEnvironment) {
  ::setenv("MEASURE_AUDIT_BUDGET", "10", 1);
  int env_code = invoke({"audit", "--binary", "--measures", "cc"}).code;
  int flag_code = invoke({"--budget", "1000000000", "audit", "--binary", "--measures", "acc", "--properties", "max",
                          "--n-max", "3"})
                      .code;
  ::unsetenv("MEASURE_AUDIT_BUDGET");
  EXPECT_EQ(env_code, kExitBudgetExceeded);
  EXPECT_EQ(flag_code, kExitOk);
}

TEST(Run, OutputFile) {
  fs::path m = write_temp("o.json", "[[1,0],[0,1]]");
  fs::path out = fs::path(MAUDIT_TEST_TMP) / "cli_inputs" / "report.json";
  fs::remove(out);
  Result r = invoke({"-o", out.string(), "eval", "--matrix", m.string(), "--no-timestamp"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_NO_THROW(nlohmann::json::parse(read_file(out)));
}

}  // namespace
}  // namespace maudit::cli
