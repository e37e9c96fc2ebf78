/*
 * Copyright 2026 The gek Authors
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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace gek::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args, std::optional<std::string> env_seed = std::nullopt) {
  std::ostringstream out, err;
  const int code = main_with_args(args, out, err, env_seed);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

TEST(ParseArgs, EntropyEvalConfig) {
  const auto c = parse_args({"entropy", "eval", "--family", "renyi", "--params", "alpha=0.5", "--dist", "u4"});
  EXPECT_EQ(c.command, Command::kEntropyEval);
  EXPECT_EQ(c.family, "renyi");
  EXPECT_EQ(c.params.at("alpha"), Rational(1, 2));
  EXPECT_EQ(c.dist, "u4");
}

TEST(ParseArgs, SeedFromEnvironmentAndFlag) {
  const std::vector<std::string> base{"verify", "--family", "renyi", "--params", "alpha=0.5"};
  EXPECT_EQ(parse_args(base).seed, 1u);
  EXPECT_EQ(parse_args(base, "42").seed, 42u);
  auto with_flag = base;
  with_flag.insert(with_flag.end(), {"--seed", "7"});
  EXPECT_EQ(parse_args(with_flag, "42").seed, 7u);
}

TEST(ParseArgs, RejectsBadInput) {
  EXPECT_THROW(parse_args({"entropy", "eval", "--family", "nope", "--dist", "u2"}), UsageError);
  EXPECT_THROW(parse_args({"entropy", "eval", "--family", "renyi", "--params", "beta=1", "--dist", "u2"}), UsageError);
  EXPECT_THROW(parse_args({"entropy", "eval", "--family", "renyi", "--dist", "u2"}), UsageError);
  EXPECT_THROW(parse_args({"frobnicate"}), UsageError);
}

TEST(SweepRangeType, InclusiveExactSteps) {
  const SweepRange r{"alpha", Rational(1, 10), Rational(9, 10), Rational(1, 10)};
  const auto v = r.values();
  ASSERT_EQ(v.size(), 9u);
  EXPECT_EQ(v.back(), Rational(9, 10));
}

TEST(Cli, RenyiOnUniform) {
  const auto r = call({"entropy", "eval", "--family", "renyi", "--params", "alpha=0.5", "--dist", "u4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1.38629436111989\n");
  EXPECT_NEAR(std::stod(r.out), std::log(4.0), 1e-14);
}

TEST(Cli, EntropyEvalJsonAndFile) {
  const auto path = temp_file("gek_cli_dist.txt", "0.5\n0.25\n0.25\n");
  const auto r = call({"entropy", "eval", "--family", "boltzmann", "--dist", path.string(), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], "1");
  EXPECT_NEAR(j["value"].get<double>(), 1.5 * std::log(2.0), 1e-14);
  std::filesystem::remove(path);
}

TEST(Cli, AlphaOneIsAUsageError) {
  const auto r = call({"entropy", "eval", "--family", "renyi", "--params", "alpha=1", "--dist", "u4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, BadDistributionIsAnInputError) {
  const auto r = call({"entropy", "eval", "--family", "boltzmann", "--dist", "0.5,0.6"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(call({"--help"}).code, 0); }

TEST(Cli, SweepEmitsOneRowPerValue) {
  const auto r = call({"entropy", "sweep", "--family", "renyi", "--param", "alpha=0.1:0.9:0.1", "--dist", "u3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 10u);
  EXPECT_EQ(l[0], "alpha,entropy");
  for (std::size_t i = 1; i < l.size(); ++i) EXPECT_NEAR(std::stod(l[i].substr(l[i].find(',') + 1)), std::log(3.0), 1e-14);
}

TEST(Cli, VerifyTsallisComposability) {
  const auto r = call({"verify", "--family", "tsallis_aq", "--params", "a=1,q=0.5", "--suite", "composability"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  const auto& rep = j["reports"][0];
  for (const char* key : {"property", "trials", "failures", "worst_residual", "seed", "witness"})
    EXPECT_TRUE(rep.contains(key)) << key;
  EXPECT_EQ(rep["trials"].get<int>(), 1000);
}

TEST(Cli, VerifyZabFullRun) {
  const auto r = call({"verify", "--family", "zab", "--params", "a=0.3,b=-0.2,alpha=0.5", "--suite", "all", "--trials",
                       "1000", "--seed", "7"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["seed"].get<int>(), 7);
  EXPECT_GE(j["reports"].size(), 5u);
}

TEST(Cli, VerifyCsvHasSubReports) {
  const auto r = call({"verify", "--family", "renyi", "--params", "alpha=0.5", "--suite", "sk", "--trials", "20",
                       "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const auto l = lines(r.out);
  EXPECT_EQ(l[0], "property,asserted,passed,trials,failures,skipped,worst_residual");
  EXPECT_NE(r.out.find("sk_axioms/expansibility,"), std::string::npos);
}

TEST(Cli, SeriesInvert) {
  const auto r = call({"series", "invert", "--b", "1,2,3", "--order", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "k,a_k\n0,1/1\n1,-2/1\n2,3/1\n3,0/1\n");
}

TEST(Cli, GrouplawAbel) {
  const auto r = call({"grouplaw", "expand", "--group", "abel", "--params", "a=1,b=1", "--order", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["axioms"]["associativity"]["holds"].get<bool>());
  std::map<std::pair<int, int>, std::string> t;
  for (const auto& e : j["terms"]) t[{e["i"].get<int>(), e["j"].get<int>()}] = e["value"];
  EXPECT_EQ((t[{1, 1}]), "2/1");
  EXPECT_EQ((t[{1, 2}]), "-1/2");
  EXPECT_EQ((t[{2, 1}]), "-1/2");
  EXPECT_EQ((t[{1, 3}]), "2/3");
}

TEST(Cli, LogExpChi) {
  EXPECT_NEAR(std::stod(call({"log", "eval", "--group", "identity", "--x", "2.5"}).out), std::log(2.5), 1e-14);
  EXPECT_NEAR(std::stod(call({"exp", "eval", "--group", "multiplicative", "--params", "q=0.5", "--x", "2"}).out), 4.0,
              1e-13);
  EXPECT_NEAR(std::stod(call({"chi", "eval", "--group", "multiplicative", "--params", "q=0.5", "--x", "1", "--y", "2"}).out),
              4.0, 1e-13);
}

TEST(Cli, ExtensivityForTsallisIsFlat) {
  const auto r = call({"extensivity", "solve", "--family", "tsallis_aq", "--params", "a=1", "--rho", "2",
                       "--horizon", "1e6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  EXPECT_EQ(l[0], "N,log_W,entropy_per_particle");
  const double last = std::stod(l.back().substr(l.back().rfind(',') + 1));
  EXPECT_NEAR(last, 2.0, 1e-5);
}

TEST(Cli, QuantumEntropyFromFile) {
  const auto path = temp_file("gek_cli_rho.txt", "0.5,0,0,0\n0,0,0.5,0\n");
  const auto r = call({"qentropy", "eval", "--rho", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(r.out), std::log(2.0), 1e-14);
  std::filesystem::remove(path);
}

TEST(Cli, LmgDemoRatioIncreases) {
  const auto r = call({"lmg", "demo", "--m", "1", "--N", "12", "--occupations", "6,6", "--a", "2", "--extensive",
                       "--sweep-L"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 7u);
  EXPECT_EQ(l[0].rfind("L,exact_entropy,asymptotic_value,ratio", 0), 0u);
  double previous = 0.0;
  for (std::size_t i = 1; i < l.size(); ++i) {
    std::istringstream row(l[i]);
    std::string cell;
    for (int c = 0; c < 4; ++c) std::getline(row, cell, ',');
    const double ratio = std::stod(cell);
    EXPECT_GT(ratio, previous);
    previous = ratio;
  }
}

TEST(Cli, OutputFlagWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "gek_cli_out.csv";
  const auto r = call({"series", "invert", "--b", "1,1", "--order", "3", "--output", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  EXPECT_EQ(s.str(), "k,a_k\n0,1/1\n1,-1/1\n2,3/2\n");
  std::filesystem::remove(path);
}

std::string run_binary(const std::string& args) {
  std::string out;
  FILE* pipe = popen((std::string(GEK_CLI_PATH) + " " + args).c_str(), "r");
  if (!pipe) return out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  pclose(pipe);
  return out;
}

TEST(Binary, RepeatedRunsAreByteIdentical) {
  const std::string args = "verify --family zq --params q=0.7,alpha=0.4 --suite all --trials 200 --seed 11";
  const auto a = run_binary(args), b = run_binary(args);
  ASSERT_FALSE(a.empty());
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace gek::cli
