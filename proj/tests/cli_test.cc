// Copyright 2026 The monfg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "monfg/catalog.h"
#include "monfg/cli.h"

namespace monfg {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result Call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = Main(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<nlohmann::json> JsonLines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(nlohmann::json::parse(line));
  return out;
}

TEST_CASE("run flags resolve to the standard regime") {
  const Command c = ParseArgs({"run", "--game", "3", "--protocol", "baseline",
                               "--episodes", "5000", "--trials", "100",
                               "--seed", "7"});
  const RunCommand run = std::get<RunCommand>(c);
  ExperimentConfig expected;
  expected.game = "3";
  expected.seed = 7;
  CHECK(run.config == expected);
}

TEST_CASE("hierarchical rate flags") {
  const RunCommand run = std::get<RunCommand>(
      ParseArgs({"run", "--protocol", "hier:self_action", "--alpha-top",
                 "0.01", "--alpha-low", "0.05"}));
  CHECK(run.config.protocol == "hier:self_action");
  CHECK(run.config.rates.top == LearningRates{0.01, 0.01});
  CHECK(run.config.rates.low == LearningRates{0.05, 0.05});

  const RunCommand split = std::get<RunCommand>(ParseArgs(
      {"run", "--alpha-low", "0.2", "--alpha-low-theta", "0.3"}));
  CHECK(split.config.rates.low.q == 0.2);
  CHECK(split.config.rates.low.theta == 0.3);
}

TEST_CASE("help lists flags with defaults") {
  const Result r = Call({"run", "--help"});
  CHECK(r.status == 0);
  for (const char* flag :
       {"--episodes", "--trials", "--rollouts", "--alpha-q", "--alpha-theta",
        "--alpha-follower", "--alpha-top", "--alpha-low", "--utilities",
        "--seed", "--measurement-interval", "--last-fraction",
        "--leader-offset", "--threads", "--config", "--out"}) {
    CHECK(r.out.find(flag) != std::string::npos);
  }
  CHECK(r.out.find("5000") != std::string::npos);
  CHECK(r.out.find("0.01") != std::string::npos);
  CHECK(r.out.find("0.05") != std::string::npos);
  CHECK(Call({"--help"}).status == 0);
}

TEST_CASE("usage errors") {
  CHECK(Call({"run", "--trials", "0"}).status == 2);
  CHECK(Call({"run", "--episodes", "ten"}).status == 2);
  CHECK(Call({"run", "--bogus"}).status == 2);
  CHECK(Call({"run", "--game", "42"}).status == 2);
  CHECK(Call({"run", "--protocol", "hier:baseline"}).status == 2);
  CHECK(Call({"run", "--utilities", "sos"}).status == 2);
  CHECK(Call({}).status == 2);
  CHECK(Call({"equilibria", "--game", "2", "--kinds", "mixed"}).status == 2);
  CHECK(Call({"stackelberg", "--game", "4", "--leader", "both"}).status == 2);
  CHECK_THROWS_AS(ParseArgs({"run", "--trials", "0"}), UsageError);
}

TEST_CASE("config file with flag overrides") {
  const auto path =
      std::filesystem::temp_directory_path() / "monfg_cli_test_config.json";
  std::ofstream(path) << R"({"game": "4", "episodes": 123, "trials": 9})";
  const RunCommand run = std::get<RunCommand>(
      ParseArgs({"run", "--config", path.string(), "--trials", "2"}));
  CHECK(run.config.game == "4");
  CHECK(run.config.episodes == 123);
  CHECK(run.config.trials == 2);
  std::filesystem::remove(path);
  CHECK(Call({"run", "--config", "/no/such/config.json"}).status == 2);
}

TEST_CASE("output directory resolution") {
  ::unsetenv("MONFG_OUT");
  CHECK(std::get<RunCommand>(ParseArgs({"run"})).out == "monfg_out");
  ::setenv("MONFG_OUT", "/tmp/from_env", 1);
  CHECK(std::get<RunCommand>(ParseArgs({"run"})).out == "/tmp/from_env");
  CHECK(std::get<RunCommand>(ParseArgs({"run", "--out", "x"})).out == "x");
  ::unsetenv("MONFG_OUT");
}

TEST_CASE("list-games") {
  const Result r = Call({"list-games"});
  CHECK(r.status == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 9);
}

TEST_CASE("verify-cne on the team example") {
  const Result r = Call({"verify-cne", "--game", "cyclic_ne", "--cycle",
                         "A,A;B,B", "--utilities", "prod", "prod"});
  CHECK(r.status == 0);
  const auto lines = JsonLines(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["certified"] == true);
  CHECK(lines[0]["kind"] == "cne");
  CHECK(lines[0]["utilities"][0] == 36.0);
  CHECK(Call({"verify-cne", "--game", "cyclic_ne", "--cycle", "A,C"}).status ==
        1);
}

TEST_CASE("cycle specs") {
  const Game g = BuildBenchmark(4);
  const CyclicStrategy c = ParseCycle(g, "L,L; M , M");
  CHECK(c.Length() == 2);
  CHECK(c[1][0].PureAction() == 1);
  CHECK(ParseCycle(g, "0,1")[0][1].PureAction() == 1);
  CHECK_THROWS_AS(ParseCycle(g, "L"), UsageError);
  CHECK_THROWS_AS(ParseCycle(g, "L,L,L"), UsageError);
}

TEST_CASE("equilibria emits one JSON object per finding") {
  const Result r = Call({"equilibria", "--game", "5", "--kinds", "pure"});
  CHECK(r.status == 0);
  const auto lines = JsonLines(r.out);
  REQUIRE(lines.size() == 3);
  for (const auto& j : lines) {
    CHECK(j["kind"] == "pure_ne");
    CHECK(j.contains("strategies"));
    CHECK(j.contains("utilities"));
    CHECK(j.contains("gap"));
    CHECK(j.contains("resolution"));
  }
  CHECK(lines[2]["utilities"][0] == 11.25);
  CHECK(r.err.find("3 equilibria") != std::string::npos);

  const auto gap = JsonLines(
      Call({"equilibria", "--game", "2", "--kinds", "gap", "--grid", "20"}).out);
  REQUIRE(gap.size() == 1);
  CHECK(gap[0]["gap"].get<double>() > 0.0);
}

TEST_CASE("stackelberg") {
  const Result r = Call({"stackelberg", "--game", "stackelberg", "--leader",
                         "row", "--leader-grid", "1", "--utilities", "sos",
                         "sos"});
  CHECK(r.status == 0);
  const auto lines = JsonLines(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["strategies"][0][0][0] == 1.0);
  CHECK(lines[0]["strategies"][0][1][0] == 1.0);
  CHECK(lines[0]["utilities"][0] == 4.0);
}

TEST_CASE("run writes artifacts") {
  const auto dir = std::filesystem::temp_directory_path() / "monfg_cli_run";
  std::filesystem::remove_all(dir);
  const Result r = Call({"run", "--game", "2", "--episodes", "20", "--trials",
                         "2", "--rollouts", "5", "--out", dir.string()});
  CHECK(r.status == 0);
  for (const char* f : {"metrics.csv", "joint_hist.csv", "config.json",
                        "summary.csv"}) {
    CHECK(std::filesystem::exists(dir / f));
  }
  CHECK(r.err.find("final mean SER") != std::string::npos);

  std::ofstream(dir / "blocker") << "x";
  CHECK(Call({"run", "--episodes", "2", "--trials", "1", "--out",
              (dir / "blocker" / "sub").string()})
            .status == 1);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace monfg
