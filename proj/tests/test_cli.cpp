// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end tests of the llscond executable.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "cli_support.hpp"

namespace {

using llscond::cli::Json;

struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + LLSCOND_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliRun r;
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("llscond_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const char* kExample = "--example alpha=0.1,beta=1,phi=pi/10";

TEST(Cli, AnalyzeExampleExact) {
  const CliRun r = run(std::string("analyze ") + kExample + " --exact --format json");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const Json j = Json::parse(r.out);
  const auto& c = j["conditioning"];
  EXPECT_NEAR(c["chi_A_upper"].get<double>(), 40.928, 2e-3);
  EXPECT_NEAR(c["chi_A_exact"]["value"].get<double>(), 35.193, 2e-3);
  EXPECT_NEAR(c["chi_A_lower"].get<double>(), 32.505, 2e-3);
  EXPECT_TRUE(j.contains("geometry"));
  EXPECT_EQ(j["catalog"]["entries"].size(), 7u);
  const auto& prov = j["provenance"];
  for (const char* k : {"version", "seed", "step_tolerance", "value_tolerance"}) {
    EXPECT_TRUE(prov.contains(k)) << k;
  }
}

TEST(Cli, ExactIsGated) {
  const CliRun r = run(std::string("analyze ") + kExample + " --format json");
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_FALSE(j["conditioning"].contains("chi_A_exact"));
  EXPECT_TRUE(j["conditioning"].contains("chi_A_upper"));
}

TEST(Cli, UnitScalesGiveInverseSigmaMin) {
  const std::string a = temp_file("a.mtx",
                                  "%%MatrixMarket matrix array real general\n3 2\n2\n0\n0\n1\n0.5\n0\n");
  const std::string b = temp_file("b.vec", "1\n2\n3\n");
  const CliRun r = run("analyze " + a + " " + b + " --scales 1,1,1 --format json");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const Json j = Json::parse(r.out);
  const double smin = j["geometry"]["sigma_min"].get<double>();
  EXPECT_NEAR(j["conditioning"]["chi_b"].get<double>(), 1.0 / smin, 1e-12 / smin);
  // A^tA = [[4, 2], [2, 1.25]]: sigma_min^2 = (5.25 - sqrt(5.25^2 - 4))/2.
  const double ev = 0.5 * (5.25 - std::sqrt(5.25 * 5.25 - 4.0));
  EXPECT_NEAR(smin, std::sqrt(ev), 1e-14);
}

TEST(Cli, JsonRoundTrips) {
  const CliRun r = run(std::string("analyze ") + kExample + " --exact --format json");
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(llscond::cli::dump_json(j), r.out);
}

std::set<std::string> json_numbers_6g(const Json& j) {
  std::set<std::string> out;
  if (j.is_structured()) {
    for (const auto& e : j) {
      auto s = json_numbers_6g(e);
      out.insert(s.begin(), s.end());
    }
  } else if (j.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", j.get<double>());
    out.insert(buf);
  } else if (j.is_number()) {
    out.insert(j.dump());
  }
  return out;
}

TEST(Cli, TextNumbersAppearInJson) {
  for (const std::string cmd : {std::string("analyze ") + kExample + " --exact",
                                std::string("perturb ") + kExample + " --trials 20",
                                std::string("paper-example ") + kExample}) {
    const CliRun text = run(cmd);
    const CliRun json = run(cmd + " --format json");
    ASSERT_EQ(text.exit_code, 0);
    const auto known = json_numbers_6g(Json::parse(json.out));
    std::istringstream lines(text.out);
    std::string line;
    while (std::getline(lines, line)) {
      const auto colon = line.find(": ");
      if (colon == std::string::npos) continue;
      std::string value = line.substr(colon + 2);
      if (!value.empty() && value.front() == '[') value = value.substr(1, value.size() - 2);
      std::istringstream parts(value);
      std::string tok;
      while (std::getline(parts, tok, ',')) {
        while (!tok.empty() && tok.front() == ' ') tok.erase(0, 1);
        char* end = nullptr;
        std::strtod(tok.c_str(), &end);
        if (tok.empty() || *end != '\0') continue;  // not a number
        if (line.find("version") != std::string::npos) continue;
        EXPECT_TRUE(known.count(tok)) << cmd << ": " << line;
      }
    }
  }
}

TEST(Cli, CsvCarriesFullPrecision) {
  const CliRun csv = run(std::string("analyze ") + kExample + " --format csv");
  const CliRun json = run(std::string("analyze ") + kExample + " --format json");
  ASSERT_EQ(csv.exit_code, 0);
  const Json j = Json::parse(json.out);
  const std::string want = "conditioning.chi_b," + [&] {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", j["conditioning"]["chi_b"].get<double>());
    return std::string(buf);
  }();
  EXPECT_NE(csv.out.find(want + "\r\n"), std::string::npos) << csv.out;
  EXPECT_EQ(csv.out.rfind("key,value\r\n", 0), 0u);
}

TEST(Cli, PerturbDeterministic) {
  const std::string cmd = std::string("perturb ") + kExample + " --trials 100 --eps 1e-8 --seed 42";
  const CliRun a = run(cmd + " --format json");
  const CliRun b = run(cmd + " --format json");
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j["trials"]["violations"].get<int>(), 0);
  EXPECT_EQ(j["provenance"]["seed"].get<int>(), 42);
}

TEST(Cli, SeedFromEnvironmentFlagWins) {
  const std::string cmd = std::string("perturb ") + kExample + " --trials 5 --format json";
  EXPECT_EQ(Json::parse(run(cmd, "LLSCOND_SEED=7").out)["provenance"]["seed"].get<int>(), 7);
  EXPECT_EQ(Json::parse(run(cmd + " --seed 9", "LLSCOND_SEED=7").out)["provenance"]["seed"].get<int>(),
            9);
}

TEST(Cli, ValidationExitCodes) {
  EXPECT_EQ(run(std::string("perturb ") + kExample + " --trials 0").exit_code, 2);
  EXPECT_EQ(run("analyze --no-such-flag").exit_code, 2);
  EXPECT_EQ(run("analyze").exit_code, 2);
  EXPECT_EQ(run(std::string("analyze ") + kExample + " --scales 1,2").exit_code, 2);
  EXPECT_EQ(run(std::string("analyze ") + kExample + " --format yaml").exit_code, 2);
  EXPECT_EQ(run("analyze --example alpha=0.1,gamma=2").exit_code, 2);

  const std::string a = temp_file("m.csv", "x,y\n1,0\n0,1\n1,1\n");
  const std::string b = temp_file("short.txt", "1\n2\n");
  const CliRun r = run("analyze " + a + " " + b + " --format json");
  EXPECT_EQ(r.exit_code, 2);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["error"]["code"], "dimension_mismatch");
  EXPECT_EQ(j["error"]["exit_code"], 2);
}

TEST(Cli, NumericalFailureExitCode) {
  const std::string a = temp_file("rd.csv", "1,2\n2,4\n3,6\n");
  const std::string b = temp_file("rd.txt", "1\n2\n3\n");
  const CliRun r = run("analyze " + a + " " + b + " --format json");
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_EQ(Json::parse(r.out)["error"]["code"], "rank_deficient");
}

TEST(Cli, CatalogSubcommand) {
  const CliRun r = run(std::string("catalog ") + kExample + " --gratton-weights 2,3 --format json");
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["catalog"]["entries"].size(), 7u);
  EXPECT_FALSE(j.contains("conditioning"));
  EXPECT_EQ(j["provenance"]["gratton_weights"][0].get<double>(), 2.0);
}

TEST(Cli, ExampleSubcommandOverestimate) {
  const CliRun r = run("paper-example --example alpha=0.01,beta=1,phi=pi/2 --format json");
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  const double ratio = j["computed"]["catalog"]["overestimate_ratio"].get<double>();
  EXPECT_NEAR(ratio, 50.0, 2.5);
  EXPECT_NEAR(j["example"]["closed_form"]["kappa"].get<double>(), 100.0, 1e-9);
}

TEST(Cli, ExampleSubcommandWarnsButSucceeds) {
  const CliRun r = run("paper-example --example alpha=2 --format json");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.out)["example"]["warnings"].size(), 1u);
}

}  // namespace
