// Copyright 2026 The qmuxopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qmux/multiplexer.hpp"
#include "qmux/qmux_format.hpp"

#ifndef QMUX_TEST_DATA_DIR
#define QMUX_TEST_DATA_DIR "tests/data"
#endif

namespace qmux::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

const std::string kData = QMUX_TEST_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

template <typename Options, typename Fn>
Result run(Fn fn, const Options& opt) {
  std::ostringstream out, err;
  const int code = fn(opt, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qmuxopt-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, OptimizeIvvxCase) {
  OptimizeOptions opt;
  opt.input = kData + "/ivvx.qmux";
  const Result r = run(cmd_optimize, opt);
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("best polarity: 11\n"), std::string::npos);
  EXPECT_NE(r.out.find("best cost: 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("original cost: 15\n"), std::string::npos);
  EXPECT_NE(r.out.find("targets: I V V I\n"), std::string::npos);
  EXPECT_NE(r.out.find("# qmuxopt "), std::string::npos);
}

TEST_F(CliTest, OptimizeJsonSchema) {
  OptimizeOptions opt;
  opt.input = kData + "/ivvx.qmux";
  opt.family = "kqf";
  opt.common.format = Format::Json;
  const Result r = run(cmd_optimize, opt);
  ASSERT_EQ(r.code, kOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc.at("manifest").at("command"), "optimize");
  EXPECT_EQ(doc.at("manifest").at("inputs")[0], opt.input);
  EXPECT_EQ(doc.at("manifest").at("config").at("family"), "kqf");
  EXPECT_TRUE(doc.at("manifest").contains("wall_seconds"));
  EXPECT_TRUE(doc.at("manifest").contains("tool_version"));
  EXPECT_LE(doc.at("search").at("best").at("cost").get<int>(), 15);
  EXPECT_EQ(doc.at("best_form").at("targets").size(), 4u);
  EXPECT_EQ(doc.at("cost").at("total"), doc.at("search").at("best").at("cost"));
}

TEST_F(CliTest, OptimizeIsByteStableWithoutTiming) {
  OptimizeOptions opt;
  opt.input = kData + "/ivvx.qmux";
  opt.mode = "random";
  opt.samples = 3;
  opt.seed = 8;
  opt.common.timing = false;
  for (Format f : {Format::Text, Format::Json, Format::Csv}) {
    opt.common.format = f;
    const Result a = run(cmd_optimize, opt);
    const Result b = run(cmd_optimize, opt);
    ASSERT_EQ(a.code, kOk);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.find("seconds"), std::string::npos);
  }
}

TEST_F(CliTest, OptimizeCsvColumns) {
  OptimizeOptions opt;
  opt.input = kData + "/ivvx.qmux";
  opt.common.format = Format::Csv;
  opt.common.timing = false;
  const Result r = run(cmd_optimize, opt);
  EXPECT_NE(r.out.find("controls,original,best,worst,average,reduction_percent,best_polarity"),
            std::string::npos);
  EXPECT_NE(r.out.find("\n2,15,2,3,2.750,81.67,11,fpqf,exhaustive\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, OptimizeWritesOutFile) {
  OptimizeOptions opt;
  opt.input = kData + "/ivvx.qmux";
  opt.common.out_path = path("report.txt");
  const Result r = run(cmd_optimize, opt);
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(slurp(opt.common.out_path).find("best polarity: 11"), std::string::npos);
}

TEST_F(CliTest, MalformedInputIsExitTwo) {
  OptimizeOptions opt;
  opt.input = kData + "/malformed.qmux";
  const Result r = run(cmd_optimize, opt);
  EXPECT_EQ(r.code, kParseError);
  EXPECT_NE(r.err.find("line 5, column 1"), std::string::npos) << r.err;
  opt.input = path("missing.qmux");
  EXPECT_EQ(run(cmd_optimize, opt).code, kParseError);
}

TEST_F(CliTest, LimitsAreExitThree) {
  GenerateOptions gen;
  gen.controls = kMaxControls > 15 ? 15 : kMaxControls;
  gen.seed = 1;
  gen.common.out_path = path("big.qmux");
  ASSERT_EQ(run(cmd_generate, gen).code, kOk);
  OptimizeOptions opt;
  opt.input = gen.common.out_path;
  const Result r = run(cmd_optimize, opt);
  EXPECT_EQ(r.code, kLimitExceeded);
  EXPECT_NE(r.err.find("14"), std::string::npos);
  gen.controls = 21;
  EXPECT_EQ(run(cmd_generate, gen).code, kLimitExceeded);
}

TEST_F(CliTest, VerifyPassAndFail) {
  VerifyOptions v;
  v.input = kData + "/ivvx.qmux";
  v.polarity = "11";
  Result r = run(cmd_verify, v);
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);

  v.polarity = "22";
  v.common.format = Format::Json;
  r = run(cmd_verify, v);
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(json::parse(r.out).at("max_deviation"), 0.0);

  // A corrupted polarized form must fail.
  const std::string bad =
      write("bad.qmux", "controls: 2\nform: fpqf:11\ntargets: I V V X\n");
  v.polarity.clear();
  v.against = bad;
  v.common.format = Format::Text;
  r = run(cmd_verify, v);
  EXPECT_EQ(r.code, kVerifyFailed);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);

  const std::string good =
      write("good.qmux", "controls: 2\nform: fpqf:11\ntargets: I V V I\n");
  v.against = good;
  EXPECT_EQ(run(cmd_verify, v).code, kOk);
}

TEST_F(CliTest, VerifyRejectsBadPolarity) {
  VerifyOptions v;
  v.input = kData + "/ivvx.qmux";
  v.polarity = "1";
  EXPECT_EQ(run(cmd_verify, v).code, kParseError);
  v.polarity = "13";
  EXPECT_EQ(run(cmd_verify, v).code, kParseError);
}

TEST_F(CliTest, OptimizeThenVerifyAlwaysPasses) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    GenerateOptions gen;
    gen.controls = 4;
    gen.pool = seed % 2 ? "nvv" : "full";
    gen.seed = seed;
    gen.common.out_path = path("m.qmux");
    ASSERT_EQ(run(cmd_generate, gen).code, kOk);
    for (const char* family : {"fpqf", "kqf"}) {
      OptimizeOptions opt;
      opt.input = gen.common.out_path;
      opt.family = family;
      opt.common.format = Format::Json;
      const Result r = run(cmd_optimize, opt);
      ASSERT_EQ(r.code, kOk);
      VerifyOptions v;
      v.input = opt.input;
      v.polarity = json::parse(r.out).at("search").at("best").at("polarity");
      EXPECT_EQ(run(cmd_verify, v).code, kOk) << v.polarity;
    }
  }
}

TEST_F(CliTest, ClassicalTableOne) {
  ClassicalOptions c;
  c.input = "01101111";
  c.order = "polarity";
  c.common.format = Format::Csv;
  const Result r = run(cmd_classical, c);
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("polarity,cost\n000,5\n001,4\n010,4\n011,5\n100,7\n101,6\n110,6\n111,7\n"),
            std::string::npos)
      << r.out;
}

TEST_F(CliTest, ClassicalConstantZero) {
  ClassicalOptions c;
  c.input = "0x00";
  c.common.format = Format::Json;
  const json doc = json::parse(run(cmd_classical, c).out);
  EXPECT_EQ(doc.at("polarities").size(), 8u);
  for (const auto& row : doc.at("polarities")) EXPECT_EQ(row.at("cost"), 0);
}

TEST_F(CliTest, ClassicalPlaParity) {
  ClassicalOptions c;
  c.input = kData + "/xor5.pla";
  c.order = "polarity";
  c.common.format = Format::Json;
  const Result r = run(cmd_classical, c);
  ASSERT_EQ(r.code, kOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc.at("polarities").size(), 32u);
  EXPECT_EQ(doc.at("polarities")[31].at("polarity"), "11111");
  EXPECT_EQ(doc.at("polarities")[31].at("cost"), 5);
  EXPECT_EQ(doc.at("manifest").at("config").at("output_index"), "0");
}

TEST_F(CliTest, ClassicalTopKAndKrm) {
  ClassicalOptions c;
  c.input = "01101111";
  c.family = "krm";
  c.top = 2;
  const Result r = run(cmd_classical, c);
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("polarity,cost\n001,4\n010,4\n"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("000,"), std::string::npos);
}

TEST_F(CliTest, ClassicalErrors) {
  ClassicalOptions c;
  c.input = "0110x";
  EXPECT_EQ(run(cmd_classical, c).code, kParseError);
  c.input = write("bad.pla", ".i 2\n.o 1\n01 1\n0z 1\n");
  const Result r = run(cmd_classical, c);
  EXPECT_EQ(r.code, kParseError);
  EXPECT_NE(r.err.find("line 4"), std::string::npos);
  c.input = kData + "/rd53.pla";
  c.output_index = 3;
  EXPECT_EQ(run(cmd_classical, c).code, kParseError);
}

TEST_F(CliTest, GenerateExplicitTargetsRoundTrip) {
  GenerateOptions g;
  g.controls = 2;
  g.targets = "I,V,V,X";
  g.common.out_path = path("fig.qmux");
  ASSERT_EQ(run(cmd_generate, g).code, kOk);
  const Multiplexer mux = load_multiplexer(g.common.out_path);
  EXPECT_EQ(mux.targets(),
            (std::vector<Unitary2>{gates::I(), gates::V(), gates::V(), gates::X()}));
  g.controls = 3;
  EXPECT_EQ(run(cmd_generate, g).code, kParseError);
}

TEST_F(CliTest, GenerateIsByteIdentical) {
  GenerateOptions g;
  g.controls = 6;
  g.pool = "full";
  g.seed = 314;
  const Result a = run(cmd_generate, g);
  const Result b = run(cmd_generate, g);
  ASSERT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("# seed: 314"), std::string::npos);
  g.common.format = Format::Json;
  const Result j = run(cmd_generate, g);
  EXPECT_EQ(json::parse(j.out).at("targets").size(), 64u);
}

TEST_F(CliTest, CostCommand) {
  CostOptions c;
  c.input = kData + "/ivvx.qmux";
  Result r = run(cmd_cost, c);
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("total 15"), std::string::npos);
  c.common.format = Format::Csv;
  r = run(cmd_cost, c);
  EXPECT_NE(r.out.find("index,controls,gate,cost\n1,2,V,5\n2,2,V,5\n3,2,X,5\n"),
            std::string::npos)
      << r.out;
  c.input = write("m.qmux", "controls: 1\nform: fpqf:1\ntargets: I RZ(0.5)\n");
  r = run(cmd_cost, c);
  EXPECT_NE(r.out.find("\"M("), std::string::npos);
  c.common.format = Format::Json;
  EXPECT_EQ(json::parse(run(cmd_cost, c).out).at("cost").at("total"), 1);
}

TEST(Format, Names) {
  EXPECT_EQ(parse_format("csv"), Format::Csv);
  EXPECT_THROW(parse_format("xml"), std::exception);
}

}  // namespace
}  // namespace qmux::cli
