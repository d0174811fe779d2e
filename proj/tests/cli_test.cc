// Copyright 2026 The ghapprox Authors.
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

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "gtest/gtest.h"

#include "ghapprox/io.h"

namespace ghapprox {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status = -1;
  std::string output;  // stdout and stderr interleaved
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ghapprox_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name)) << text;
    return Path(name);
  }

  static std::string Read(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static CliRun Exec(const std::string& args) {
    const std::string cmd = std::string(GHAPPROX_CLI_PATH) + " " + args + " 2>&1";
    CliRun run;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return run;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) run.output.append(buf, got);
    const int raw = pclose(pipe);
    run.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return run;
  }

  // 64 points on the unit circle and sin of the angle.
  void WriteCircle() const {
    std::ostringstream pts, vals;
    for (int k = 0; k < 64; ++k) {
      const double t = 2.0 * std::numbers::pi * k / 64.0;
      pts << FormatDouble(std::cos(t)) << ' ' << FormatDouble(std::sin(t)) << '\n';
      vals << k << ',' << FormatDouble(std::sin(t)) << '\n';
    }
    Write("circle.txt", pts.str());
    Write("sin.csv", vals.str());
  }

  fs::path dir_;
};

TEST_F(CliTest, ValidateReportsFirstViolation) {
  const CliRun bad = Exec("validate " + Write("asym.csv", "0,1\n2,0\n"));
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.output.find("Asymmetric(0,1)"), std::string::npos) << bad.output;

  const CliRun ok = Exec("validate " + Write("ok.csv", "0,1\n1,0\n"));
  EXPECT_EQ(ok.status, 0) << ok.output;

  const CliRun garbled = Exec("validate " + Write("g.csv", "0,1\n1,x\n"));
  EXPECT_EQ(garbled.status, 2);
  EXPECT_NE(garbled.output.find("g.csv:2"), std::string::npos) << garbled.output;

  EXPECT_EQ(Exec("validate " + Path("missing.csv")).status, 2);
  EXPECT_EQ(Exec("no-such-command").status, 2);
}

TEST_F(CliTest, GhPrintsValueAndWitnesses) {
  const std::string x = Write("x.csv", "0,1\n1,0\n");
  const std::string y = Write("y.csv", "0,2\n2,0\n");
  for (const char* method : {"exact", "bnb"}) {
    const CliRun run = Exec("gh " + x + " " + y + " --method " + method + " --json " + Path("gh.json"));
    EXPECT_EQ(run.status, 0) << run.output;
    EXPECT_EQ(run.output, "1\nforward: 0 1\nbackward: 0 1\n");
    const nlohmann::json j = nlohmann::json::parse(Read(Path("gh.json")));
    EXPECT_EQ(j["value"].get<double>(), 1.0);
    const SpaceRef sx = ReadDistanceMatrixCsv(x), sy = ReadDistanceMatrixCsv(y);
    EXPECT_EQ(PointMapFromJson(j["forward"], sx, sy).image(), (std::vector<std::size_t>{0, 1}));
  }
}

TEST_F(CliTest, Gh0Certificate) {
  const std::string x = Write("x.csv", "0,1\n1,0\n");
  const CliRun run = Exec("gh0 " + x + " " + Write("f.csv", "0,0\n1,0\n") + " " + x + " " +
                       Write("g.csv", "0,0.3\n1,0.3\n"));
  EXPECT_EQ(run.status, 0) << run.output;
  const nlohmann::json j = nlohmann::json::parse(run.output);
  EXPECT_EQ(j["value"].get<double>(), 0.3);
  EXPECT_EQ(j["supnorm_i"].get<double>(), 0.3);
}

TEST_F(CliTest, NetFitWritesReparsableNetwork) {
  const std::string x = Write("x.csv", "0,1,2\n1,0,1\n2,1,0\n");
  const std::string t = Write("t.csv", "0,0.5\n1,-1\n2,2\n");
  const CliRun exact = Exec("net-fit " + x + " " + t + " --json " + Path("net.json"));
  EXPECT_EQ(exact.status, 0) << exact.output;
  const SpaceRef space = ReadDistanceMatrixCsv(x);
  const ShallowNetwork net = NetworkFromJson(nlohmann::json::parse(Read(Path("net.json"))), space);
  EXPECT_LE(SupNormDistance(Evaluate(net), ReadFunctionValuesCsv(t, space)), 1e-9);

  const CliRun lsq = Exec("net-fit " + x + " " + t + " --mode lsq --units 5 --seed 3");
  EXPECT_EQ(lsq.status, 0) << lsq.output;
  EXPECT_EQ(Exec("net-fit " + x + " " + t + " --mode lsq --units 5 --seed 3").output, lsq.output);
  EXPECT_EQ(Exec("net-fit " + x + " " + t + " --activation relu").status, 2);
}

TEST_F(CliTest, DensityCertificateVerifies) {
  WriteCircle();
  const CliRun run = Exec("density " + Path("circle.txt") + " " + Path("sin.csv") +
                       " --epsilon 0.25 --json " + Path("cert.json") + " --network " + Path("net.json"));
  EXPECT_EQ(run.status, 0) << run.output;
  const nlohmann::json cert = nlohmann::json::parse(Read(Path("cert.json")));
  EXPECT_TRUE(cert["pass"].get<bool>());
  EXPECT_LT(cert["bound"].get<double>(), 0.25);

  const CliRun verify = Exec("verify-density " + Path("circle.txt") + " " + Path("sin.csv") + " " +
                          Path("cert.json") + " " + Path("net.json"));
  EXPECT_EQ(verify.status, 0) << verify.output;

  // A tampered bound no longer reproduces.
  nlohmann::json tampered = cert;
  tampered["bound"] = cert["bound"].get<double>() + 1e-3;
  Write("bad.json", tampered.dump());
  EXPECT_EQ(Exec("verify-density " + Path("circle.txt") + " " + Path("sin.csv") + " " + Path("bad.json") +
                 " " + Path("net.json"))
                .status,
            1);

  const CliRun exhausted =
      Exec("density " + Path("circle.txt") + " " + Path("sin.csv") + " --epsilon 0.5 --max-shrink 0");
  EXPECT_EQ(exhausted.status, 1);
  EXPECT_NE(exhausted.output.find("NetExhausted"), std::string::npos) << exhausted.output;
}

TEST_F(CliTest, StudyTableIsReproducible) {
  WriteCircle();
  const std::string args =
      "study " + Path("circle.txt") + " " + Path("sin.csv") + " --epsilons 0.5,0.25,0.1 --omit-timing --csv ";
  ASSERT_EQ(Exec(args + Path("a.csv")).status, 0);
  ASSERT_EQ(Exec(args + Path("b.csv")).status, 0);
  EXPECT_EQ(Read(Path("a.csv")), Read(Path("b.csv")));
  std::ifstream in(Path("a.csv"));
  const std::vector<StudyRow> rows = ParseStudyCsv(in, "a.csv");
  ASSERT_EQ(rows.size(), 3u);
  for (const StudyRow& row : rows) {
    EXPECT_TRUE(row.pass);
    EXPECT_EQ(row.millis, 0);
  }
  EXPECT_EQ(Exec("study " + Path("circle.txt") + " " + Path("sin.csv") + " --epsilons 0.1,0.5").status, 2);
}

TEST_F(CliTest, PropertiesAndHelp) {
  const CliRun props = Exec("properties --cases 30 --seed 5");
  EXPECT_EQ(props.status, 0) << props.output;
  const CliRun help = Exec("--help");
  EXPECT_EQ(help.status, 0);
  EXPECT_NE(help.output.find("0-based"), std::string::npos);
  EXPECT_NE(help.output.find("epsilon,net_size,fit_error,bound,pass,millis"), std::string::npos);
}

}  // namespace
}  // namespace ghapprox
