// Copyright 2026 The holevo-gauss Authors
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


#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace holevo::cli {
namespace {

using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "holevo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data_file(const char* name) {
  return std::string(HOLEVO_TEST_DATA_DIR) + "/" + name;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("HOLEVO_SOLVER_TOL"); }
  void TearDown() override { unsetenv("HOLEVO_SOLVER_TOL"); }
};

TEST_F(CliTest, BoundAllMethodsAgree) {
  const Outcome o = invoke({"bound", "--v", "0.75", "--r", "0.5", "--method", "all"});
  ASSERT_EQ(o.code, kOk) << o.err;
  const json j = json::parse(o.out);
  const double expected = 3.0 * std::exp(-1.0);
  EXPECT_NEAR(j["sdp"]["sigma_star"].get<double>(), expected, 1e-7);
  EXPECT_NEAR(j["closed"]["sigma_star"].get<double>(), expected, 1e-15);
  EXPECT_EQ(j["plan"]["type"], "double_homodyne");
  EXPECT_EQ(j["sdp"]["certificate"]["verdict"], "optimal");
  EXPECT_TRUE(j["violations"].empty());
}

TEST_F(CliTest, BoundVacuumIsTwo) {
  const Outcome o = invoke({"bound", "--v", "0.5", "--r", "0", "--method", "sdp"});
  ASSERT_EQ(o.code, kOk) << o.err;
  EXPECT_NEAR(json::parse(o.out)["sdp"]["sigma_star"].get<double>(), 2.0, 1e-8);
}

TEST_F(CliTest, BoundFromProbeFile) {
  const Outcome o = invoke({"bound", "--probe-file", data_file("vacuum4.json")});
  ASSERT_EQ(o.code, kOk) << o.err;
  const json j = json::parse(o.out);
  EXPECT_NEAR(j["sdp"]["sigma_star"].get<double>(), 2.0, 1e-8);
  EXPECT_LE(std::abs(j["sdp"]["certificate"]["gap"].get<double>()), 1e-8);
}

TEST_F(CliTest, BoundInputErrors) {
  EXPECT_EQ(invoke({"bound", "--probe-file", data_file("truncated.json")}).code, kInputError);
  EXPECT_EQ(invoke({"bound", "--probe-file", data_file("unphysical.json")}).code, kInputError);
  EXPECT_EQ(invoke({"bound", "--probe-file", "/nonexistent.json"}).code, kInputError);
  EXPECT_EQ(invoke({"bound", "--v", "0.2", "--r", "0"}).code, kInputError);
  EXPECT_EQ(invoke({"bound", "--v", "1"}).code, kInputError);
  EXPECT_EQ(invoke({"bound", "--probe-file", data_file("vacuum4.json"), "--method", "closed"})
                .code,
            kInputError);
  EXPECT_EQ(invoke({"bound", "--v", "1", "--r", "0", "--method", "bogus"}).code, kInputError);
  const Outcome o = invoke({"bound", "--probe-file", data_file("truncated.json")});
  EXPECT_NE(o.err.find("invalid JSON"), std::string::npos) << o.err;
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kInputError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kInputError);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST_F(CliTest, SweepFormat) {
  const Outcome o = invoke({"sweep", "--v", "0.75", "--r-min", "0", "--r-max", "0.4",
                            "--steps", "5", "--threads", "2"});
  ASSERT_EQ(o.code, kOk) << o.err;
  const auto lines = split(o.out, '\n');
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[0], "v,r,holevo_sdp,holevo_closed,sld,rld,dual_gap,t,entangled");
  const double r0 = 0.5 * std::log(1.5);
  for (size_t k = 1; k < lines.size(); ++k) {
    const auto f = split(lines[k], ',');
    ASSERT_EQ(f.size(), 9u);
    const double r = std::stod(f[1]);
    EXPECT_NEAR(std::stod(f[2]), std::stod(f[3]), 1e-6);
    if (r < r0) {
      EXPECT_NE(f[7], "NaN");
      EXPECT_EQ(f[8], "false");
    } else {
      EXPECT_EQ(f[7], "NaN");
      EXPECT_EQ(f[8], "true");
    }
  }
  // 17 significant digits: 0.1 prints as 0.10000000000000001.
  EXPECT_EQ(split(lines[2], ',')[1], "0.10000000000000001");
}

TEST_F(CliTest, SweepIsDeterministicAndWritesFiles) {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string a = (dir / "holevo_sweep_a.csv").string();
  const std::string b = (dir / "holevo_sweep_b.csv").string();
  ASSERT_EQ(invoke({"sweep", "--v", "1", "--steps", "7", "--out", a, "--threads", "1"}).code,
            kOk);
  ASSERT_EQ(invoke({"sweep", "--v", "1", "--steps", "7", "--out", b, "--threads", "3"}).code,
            kOk);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  EXPECT_FALSE(sa.str().empty());
  EXPECT_EQ(sa.str(), sb.str());
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  EXPECT_EQ(invoke({"sweep", "--v", "1", "--out", "/nonexistent/dir/x.csv"}).code, kInputError);
  EXPECT_EQ(invoke({"sweep", "--v", "1", "--steps", "0"}).code, kInputError);
}

TEST_F(CliTest, SweepRowMatchesBound) {
  const Outcome s = invoke({"sweep", "--v", "1", "--r-min", "0.2", "--r-max", "0.2",
                            "--steps", "1"});
  ASSERT_EQ(s.code, kOk) << s.err;
  const auto row = split(split(s.out, '\n')[1], ',');
  const Outcome b = invoke({"bound", "--v", "1", "--r", "0.2"});
  ASSERT_EQ(b.code, kOk);
  const json j = json::parse(b.out);
  EXPECT_EQ(std::stod(row[2]), j["sdp"]["sigma_star"].get<double>());
  EXPECT_EQ(std::stod(row[4]), j["sld"].get<double>());
}

TEST_F(CliTest, ThresholdRow) {
  const double r0 = 0.5 * std::log(1.5);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", r0);
  const Outcome o = invoke({"sweep", "--v", "0.75", "--r-min", buf, "--r-max", buf,
                            "--steps", "1"});
  ASSERT_EQ(o.code, kOk) << o.err;
  const auto row = split(split(o.out, '\n')[1], ',');
  EXPECT_NEAR(std::stod(row[2]), 2.0, 1e-7);
}

TEST_F(CliTest, SolverToleranceFromEnvironment) {
  setenv("HOLEVO_SOLVER_TOL", "1e-4", 1);
  const Outcome loose = invoke({"bound", "--v", "1", "--r", "0.2", "--method", "sdp"});
  ASSERT_EQ(loose.code, kOk) << loose.err;
  const int loose_iters = json::parse(loose.out)["sdp"]["iterations"].get<int>();
  unsetenv("HOLEVO_SOLVER_TOL");
  const Outcome tight = invoke({"bound", "--v", "1", "--r", "0.2", "--method", "sdp"});
  const int tight_iters = json::parse(tight.out)["sdp"]["iterations"].get<int>();
  EXPECT_LT(loose_iters, tight_iters);

  setenv("HOLEVO_SOLVER_TOL", "abc", 1);
  EXPECT_EQ(invoke({"bound", "--v", "1", "--r", "0.2"}).code, kInputError);
  setenv("HOLEVO_SOLVER_TOL", "-1", 1);
  EXPECT_EQ(invoke({"bound", "--v", "1", "--r", "0.2"}).code, kInputError);
}

TEST_F(CliTest, VerifyClosedForm) {
  Outcome o = invoke({"verify", "--v", "0.75", "--r", "0.5", "--closed-form"});
  ASSERT_EQ(o.code, kOk) << o.err;
  json j = json::parse(o.out);
  EXPECT_EQ(j["certificate"]["verdict"], "optimal");
  EXPECT_LE(std::abs(j["certificate"]["gap"].get<double>()), 1e-9);

  for (const char* c0 : {"0", "mid", "max"}) {
    o = invoke({"verify", "--v", "0.75", "--r", "0.1", "--closed-form", "--c0", c0});
    EXPECT_EQ(o.code, kOk) << c0 << " " << o.err;
  }
  EXPECT_EQ(invoke({"verify", "--v", "0.75", "--r", "0.1", "--closed-form", "--c0", "5"}).code,
            kInputError);
  EXPECT_EQ(invoke({"verify", "--v", "0.5", "--r", "0.1", "--closed-form"}).code,
            kInputError);
}

TEST_F(CliTest, VerifyNumericCertificate) {
  const Outcome o = invoke({"verify", "--probe-file", data_file("vacuum4.json")});
  ASSERT_EQ(o.code, kOk) << o.err;
  EXPECT_EQ(json::parse(o.out)["source"], "sdp");
}

TEST_F(CliTest, SimulateReport) {
  const Outcome o = invoke({"simulate", "--scheme", "double_homodyne", "--v", "0.75", "--r",
                            "0.5", "--shots", "100000", "--seed", "42", "--theta", "0.3",
                            "-0.2"});
  ASSERT_EQ(o.code, kOk) << o.err;
  const json j = json::parse(o.out);
  for (const char* key : {"scheme", "v", "r", "t", "theta", "shots", "seed", "empirical_mean",
                          "empirical_mse_sum", "standard_error", "bound_reference"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_TRUE(j["attains_bound"].get<bool>());
  EXPECT_NEAR(j["bound_reference"].get<double>(), 3.0 * std::exp(-1.0), 1e-12);
  EXPECT_EQ(j["seed"].get<std::uint64_t>(), 42u);
  const Outcome again = invoke({"simulate", "--scheme", "double_homodyne", "--v", "0.75",
                                "--r", "0.5", "--shots", "100000", "--seed", "42", "--theta",
                                "0.3", "-0.2"});
  EXPECT_EQ(o.out, again.out);
}

TEST_F(CliTest, SimulateHeterodyneDefaultsToOptimalTransmission) {
  const Outcome o = invoke({"simulate", "--scheme", "double_unbalanced_heterodyne", "--v", "1",
                            "--r", "0.1", "--shots", "50000", "--seed", "3"});
  ASSERT_EQ(o.code, kOk) << o.err;
  const json j = json::parse(o.out);
  const double t = (2.0 * std::exp(0.2) - 1.0) / (4.0 * std::cosh(0.2) - 2.0);
  EXPECT_NEAR(j["t"].get<double>(), t, 1e-15);
  EXPECT_EQ(invoke({"simulate", "--scheme", "double_unbalanced_heterodyne", "--v", "1", "--r",
                    "1.0"})
                .code,
            kInputError);
  EXPECT_EQ(invoke({"simulate", "--scheme", "double_homodyne", "--v", "1", "--r", "0.1",
                    "--shots", "0"})
                .code,
            kInputError);
}

}  // namespace
}  // namespace holevo::cli
