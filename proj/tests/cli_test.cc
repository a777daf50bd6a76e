// Copyright 2026 The alphami Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

#include "alphami/error.h"
#include "cli/event.h"
#include "cli/io.h"
#include "cli/report.h"
#include "cli/run.h"

namespace alphami::cli {
namespace {

const std::string kData = ALPHAMI_TEST_DATA;

ErrorKind KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kShape;
}

std::string MessageOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

const char* kSmall = R"({"x_labels": ["a", "b"], "y_labels": ["c"], "z_labels": ["u"],
  "probs": [0.25, 0.75]})";

TEST(IoTest, LoadsReferenceFile) {
  const Joint3 j = LoadJoint(kData + "/reference_joint.json");
  EXPECT_EQ(j.nx(), 2u);
  EXPECT_EQ(j.nz(), 2u);
  EXPECT_DOUBLE_EQ(j(0, 0, 0), 0.25);
  const Joint3 s = ParseJoint(kSmall, "s");
  EXPECT_EQ(s.x_labels()[1], "b");
  EXPECT_DOUBLE_EQ(s(1, 0, 0), 0.75);
}

TEST(IoTest, SmallMassErrorIsRescaled) {
  const Joint3 j = ParseJoint(R"({"x_labels":["a","b"],"y_labels":["c"],"z_labels":["u"],
    "probs":[0.25, 0.7500000000005]})", "s");
  EXPECT_NEAR(j(0, 0, 0) + j(1, 0, 0), 1.0, 1e-15);
}

TEST(IoTest, RejectsBadMass) {
  EXPECT_EQ(KindOf([] {
              ParseJoint(R"({"x_labels":["a","b"],"y_labels":["c"],"z_labels":["u"],
                "probs":[0.25, 0.65]})", "s");
            }),
            ErrorKind::kValidation);
  EXPECT_EQ(KindOf([] {
              ParseJoint(R"({"x_labels":["a","b"],"y_labels":["c"],"z_labels":["u"],
                "probs":[1.25, -0.25]})", "s");
            }),
            ErrorKind::kValidation);
}

TEST(IoTest, ParseErrorsCarryPosition) {
  const auto bad = [] { ParseJoint("{\n  \"x_labels\": [\"a\",\n  ]", "in.json"); };
  EXPECT_EQ(KindOf(bad), ErrorKind::kParse);
  const std::string message = MessageOf(bad);
  EXPECT_NE(message.find("in.json:"), std::string::npos) << message;
  EXPECT_NE(message.find(":3:"), std::string::npos) << message;
}

TEST(IoTest, MissingOrMistypedFields) {
  const auto missing = [] {
    ParseJoint(R"({"x_labels":["a"],"y_labels":["c"],"probs":[1]})", "s");
  };
  EXPECT_EQ(KindOf(missing), ErrorKind::kParse);
  EXPECT_NE(MessageOf(missing).find("z_labels"), std::string::npos);
  EXPECT_EQ(KindOf([] {
              ParseJoint(R"({"x_labels":["a"],"y_labels":["c"],"z_labels":["u"],
                "probs":[1, 0]})", "s");
            }),
            ErrorKind::kValidation);
  EXPECT_EQ(KindOf([] {
              ParseJoint(R"({"x_labels":["a","a"],"y_labels":["c"],"z_labels":["u"],
                "probs":[0.5, 0.5]})", "s");
            }),
            ErrorKind::kValidation);
  EXPECT_EQ(KindOf([] { LoadJoint(kData + "/does_not_exist.json"); }),
            ErrorKind::kResource);
}

TEST(IoTest, Channel) {
  const Kernel k = LoadChannel(kData + "/channel.json");
  EXPECT_EQ(k.in_size(), 2u);
  EXPECT_DOUBLE_EQ(k(1, 1), 0.75);
  EXPECT_EQ(KindOf([] {
              ParseChannel(R"({"in_labels":["a"],"out_labels":["b","c"],"rows":[[0.5]]})",
                           "s");
            }),
            ErrorKind::kValidation);
}

TEST(EventTest, Grammar) {
  const Joint3 j = LoadJoint(kData + "/reference_joint.json");
  const EventMask eq = ParseEvent("x==y", j);
  EXPECT_EQ(eq.CountTrue(), 4u);
  EXPECT_TRUE(eq(0, 0, 1));
  EXPECT_FALSE(eq(0, 1, 1));
  EXPECT_EQ(ParseEvent("x != y", j).CountTrue(), 4u);
  EXPECT_EQ(ParseEvent("!(x==y)", j).cells().size(), 8u);
  EXPECT_EQ(ParseEvent("x==0 && z==1", j).CountTrue(), 2u);
  EXPECT_EQ(ParseEvent("x==0 || y=='0'", j).CountTrue(), 6u);
  // && binds tighter than ||.
  EXPECT_EQ(ParseEvent("x==0 || x==1 && y==0", j).CountTrue(), 6u);
  EXPECT_EQ(ParseEvent("(x==0 || x==1) && y==0", j).CountTrue(), 4u);
  EXPECT_EQ(ParseEvent("!!(z==\"1\")", j).CountTrue(), 4u);
}

TEST(EventTest, Errors) {
  const Joint3 j = LoadJoint(kData + "/reference_joint.json");
  for (const char* text : {"", "x==", "x=y", "(x==0", "x==0)", "w==0", "x==0 &&", "x==0 & y==0"}) {
    EXPECT_EQ(KindOf([&] { ParseEvent(text, j); }), ErrorKind::kParse) << text;
  }
  EXPECT_EQ(KindOf([&] { ParseEvent("x==7", j); }), ErrorKind::kValidation);
  EXPECT_NE(MessageOf([&] { ParseEvent("x==0 &&& y==0", j); }).find("column"),
            std::string::npos);
}

TEST(ReportTest, Format) {
  EXPECT_EQ(FormatNumber(0.5), "0.5");
  EXPECT_EQ(FormatNumber(std::log(2.0)), "0.69314718056");
  EXPECT_EQ(FormatNumber(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(Sha256Hex(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");

  Report r;
  r.Set("command", "measure");
  r.Value("op", "arg", "q", 1.0);
  r.Check("op", "arg", "ok", 2.0, true);
  r.Check("op", "arg", "bad", 3.0, false);
  EXPECT_FALSE(r.AllPassed());
  EXPECT_EQ(r.checks(), 2);
  const std::string text = r.Render();
  EXPECT_EQ(text,
            "command: measure\nchecks: 2\nfailures: 1\nstatus: FAIL\n\n"
            "operation\targument\tquantity\tvalue\tcheck\n"
            "op\targ\tq\t1\t-\n"
            "op\targ\tok\t2\tPASS\n"
            "op\targ\tbad\t3\tFAIL\n");
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult RunWith(const RunConfig& c) {
  std::ostringstream out, err;
  const int code = Run(c, out, err);
  return {code, out.str(), err.str()};
}

RunConfig Config(const std::string& command) {
  RunConfig c;
  c.command = command;
  c.input = kData + "/reference_joint.json";
  return c;
}

TEST(RunTest, MeasureReportsReferenceValues) {
  const RunResult r = RunWith(Config("measure"));
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_TRUE(r.err.empty());
  EXPECT_NE(r.out.find("status: PASS"), std::string::npos);
  EXPECT_NE(r.out.find("0.376452812919"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("0.34657359028"), std::string::npos);
}

TEST(RunTest, EveryCommandIsDeterministic) {
  std::vector<RunConfig> configs;
  configs.push_back(Config("measure"));
  RunConfig bound = Config("bound");
  bound.event = "x==y";
  bound.alphas = {"2"};
  configs.push_back(bound);
  RunConfig sdpi = Config("sdpi");
  sdpi.input = kData + "/wxz_joint.json";
  sdpi.channel = kData + "/channel.json";
  sdpi.alphas = {"2"};
  sdpi.budget = 500;
  configs.push_back(sdpi);
  RunConfig sim = Config("simulate");
  sim.n = 3;
  sim.tau = "0.5";
  sim.trials = 2000;
  sim.seed = 9;
  configs.push_back(sim);
  RunConfig exponent = Config("exponent");
  exponent.e_q = {0.0, 0.1};
  exponent.e_p = {0.0};
  configs.push_back(exponent);
  configs.push_back(Config("selftest"));
  for (const RunConfig& c : configs) {
    const RunResult a = RunWith(c);
    const RunResult b = RunWith(c);
    EXPECT_EQ(a.code, kExitPass) << c.command << "\n" << a.out << a.err;
    EXPECT_EQ(a.out, b.out) << c.command;
    EXPECT_NE(a.out.find("command: " + c.command), std::string::npos);
  }
}

TEST(RunTest, ErrorsBecomeJsonRecords) {
  RunConfig c = Config("measure");
  c.input = kData + "/does_not_exist.json";
  RunResult r = RunWith(c);
  EXPECT_EQ(r.code, kExitError);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(r.err.rfind("{\"error\":{", 0), 0u) << r.err;
  EXPECT_NE(r.err.find("\"command\":\"measure\""), std::string::npos) << r.err;
  EXPECT_EQ(r.err.back(), '\n');
  EXPECT_EQ(r.err.find('\n'), r.err.size() - 1);

  c = Config("bound");
  c.event = "x==";
  r = RunWith(c);
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("\"kind\":\"parse\""), std::string::npos) << r.err;

  c = Config("nonsense");
  EXPECT_EQ(RunWith(c).code, kExitError);
}

}  // namespace
}  // namespace alphami::cli
