// Copyright 2026 The qwalk Authors
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "qwalk/report_json.hpp"

#ifndef QWALK_CLI_PATH
#error "QWALK_CLI_PATH must be defined"
#endif

namespace qwalk {
namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string command = std::string(QWALK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  CliResult r;
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

TEST(Cli, SpectrumComplete3) {
  const CliResult r = run("spectrum --complete 3 --format csv");
  ASSERT_EQ(r.status, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[0], "eigenvalue,multiplicity");
  EXPECT_EQ(split(l[1])[1], "1");
  EXPECT_NEAR(std::stod(split(l[1])[0]), 1.0, 1e-12);
  EXPECT_EQ(split(l[2])[1], "2");
  EXPECT_NEAR(std::stod(split(l[2])[0]), -0.5, 1e-12);
}

TEST(Cli, SpectrumCycle4Table) {
  const CliResult r = run("spectrum --cycle 4");
  ASSERT_EQ(r.status, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 6u);
  EXPECT_EQ(l[1], "route circulant");
  const std::vector<std::pair<double, int>> expected = {{1.0, 1}, {0.0, 2}, {-1.0, 1}};
  for (std::size_t k = 0; k < expected.size(); ++k) {
    std::istringstream in(l[3 + k]);
    double value = 0.0;
    int multiplicity = 0;
    in >> value >> multiplicity;
    EXPECT_NEAR(value, expected[k].first, 1e-12);
    EXPECT_EQ(multiplicity, expected[k].second);
  }
  EXPECT_EQ(l[4].substr(0, 2), "0 ");
}

TEST(Cli, EvolveK2AtQuarterPi) {
  const CliResult r = run("evolve --complete 2 --time pi/4");
  ASSERT_EQ(r.status, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0], "t,P_0,P_1,tv");
  const auto cells = split(l[1]);
  ASSERT_EQ(cells.size(), 4u);
  EXPECT_NEAR(std::stod(cells[1]), 0.5, 1e-12);
  EXPECT_NEAR(std::stod(cells[2]), 0.5, 1e-12);
  EXPECT_NEAR(std::stod(cells[3]), 0.0, 1e-12);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Cli, EvolveWindowIsDeterministic) {
  const std::string args = "evolve --cycle 6 --window 5 --step 0.25";
  const CliResult a = run(args);
  const CliResult b = run(args);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const auto l = lines(a.out);
  ASSERT_EQ(l.size(), 22u);
  EXPECT_EQ(split(l[1])[0], "0");
  EXPECT_EQ(split(l[5])[0], "1");
  // 17 significant digits round-trip.
  const auto row = split(l[7]);
  double total = 0.0;
  for (std::size_t k = 1; k + 1 < row.size(); ++k) total += std::stod(row[k]);
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Cli, OutFileMatchesStdout) {
  const auto path = std::filesystem::temp_directory_path() / "qwalk_cli_test_out.csv";
  const CliResult to_file = run("evolve --complete 4 --time 3pi/4 --out " + path.string());
  ASSERT_EQ(to_file.status, 0);
  EXPECT_TRUE(to_file.out.empty());
  std::ifstream in(path, std::ios::binary);
  const std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(content, run("evolve --complete 4 --time 3pi/4").out);
  std::filesystem::remove(path);
}

TEST(Cli, CertifyComplete7) {
  const CliResult r = run("certify --complete 7 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "does-not-mix-certified");
  EXPECT_NEAR(j["deficit"].get<double>(), 3.0 / 49.0, 1e-15);
  EXPECT_TRUE(j["numeric_cross_check"]["agrees"].get<bool>());
  nlohmann::json report = j;
  report.erase("numeric_cross_check");
  EXPECT_EQ(report_from_json(report), certify_complete(7));
}

TEST(Cli, CertifyMixingTable) {
  const CliResult r = run("certify --multipartite 2 2");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("mixes"), std::string::npos);
  EXPECT_NE(r.out.find("(pi/2)"), std::string::npos);
  EXPECT_NE(r.out.find("(3pi/2)"), std::string::npos);
  EXPECT_NE(r.out.find("agrees"), std::string::npos);
}

TEST(Cli, ScanJsonRoundTrips) {
  const CliResult r = run("scan --complete 3");
  ASSERT_EQ(r.status, 0);
  const MixingReport report = report_from_json(r.out);
  EXPECT_EQ(report.verdict, Verdict::mixes);
  // One period of K_3 is 4pi/3 and holds both witnesses.
  ASSERT_EQ(report.witness_times.size(), 2u);
  EXPECT_NEAR(report.witness_times[0], 4.0 * std::numbers::pi / 9.0, 1e-7);
  EXPECT_NEAR(report.witness_times[1], 8.0 * std::numbers::pi / 9.0, 1e-7);
  EXPECT_EQ(to_json(report).dump(2) + "\n", r.out);
}

TEST(Cli, ScanCycleEvidence) {
  const CliResult r = run("scan --cycle 5 --window 50 --step 0.01 --format json");
  ASSERT_EQ(r.status, 0);
  const MixingReport report = report_from_json(r.out);
  EXPECT_EQ(report.verdict, Verdict::no_mixing_found_evidence);
  EXPECT_GT(report.min_distance, 1e-3);
}

TEST(Cli, CompareClassicalK2) {
  const CliResult r = run("compare-classical --complete 2 --steps 2 --time 0 --time pi/4 --format csv");
  ASSERT_EQ(r.status, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 1u + 3u + 3u + 2u + 2u);
  EXPECT_EQ(l[0], "method,step_or_time,P_0,P_1,tv");
  EXPECT_EQ(l[2], "simple-discrete,1,0,1,0.5");
  EXPECT_EQ(l[5], "lazy-discrete,1,0.5,0.5,0");
  const auto quantum = split(l.back());
  EXPECT_EQ(quantum[0], "quantum");
  EXPECT_NEAR(std::stod(quantum[2]), 0.5, 1e-12);
}

TEST(Cli, TableHasExactlyFourMixingRows) {
  const CliResult r = run("table --format csv");
  ASSERT_EQ(r.status, 0);
  const auto l = lines(r.out);
  std::vector<std::string> mixing;
  for (std::size_t k = 1; k < l.size(); ++k) {
    const auto cells = split(l[k]);
    if (cells[2] == "mixes") mixing.push_back(cells[0]);
  }
  EXPECT_EQ(mixing, (std::vector<std::string>{"K_2", "K_3", "K_4", "K_{2x2}"}));
  EXPECT_EQ(l.size(), 1u + 9u + 12u);
}

TEST(Cli, InvalidParametersExitTwo) {
  EXPECT_EQ(run("spectrum --complete 1").status, 2);
  EXPECT_EQ(run("spectrum --cycle 2").status, 2);
  EXPECT_EQ(run("spectrum").status, 2);
  EXPECT_EQ(run("spectrum --complete 3 --cycle 4").status, 2);
  EXPECT_EQ(run("evolve --complete 3 --time abc").status, 2);
  EXPECT_EQ(run("evolve --complete 3").status, 2);
  EXPECT_EQ(run("certify --cycle 5").status, 2);
  EXPECT_EQ(run("scan --cycle 5 --window -1").status, 2);
  EXPECT_EQ(run("compare-classical --complete 3 --continuous").status, 2);
  EXPECT_EQ(run("bogus").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("spectrum --complete 3 --format xml").status, 2);
  EXPECT_EQ(run("evolve --complete 3 --time 1 --start 3").status, 2);
}

TEST(Cli, UnwritableOutputExitsThree) {
  EXPECT_EQ(run("spectrum --complete 3 --out /nonexistent-dir/x.csv").status, 3);
}

TEST(Cli, HelpExitsZero) {
  const CliResult r = run("--help");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("compare-classical"), std::string::npos);
}

}  // namespace
}  // namespace qwalk
