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

#ifndef MONFG_CLI_H_
#define MONFG_CLI_H_

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "monfg/equilibrium.h"
#include "monfg/errors.h"
#include "monfg/harness.h"

namespace monfg {

// Bad flag, bad value or violated config invariant on the command line.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunCommand {
  ExperimentConfig config;
  std::filesystem::path out;
};

struct EquilibriaCommand {
  std::string game;
  std::array<std::string, 2> utilities = {"sos", "prod"};
  int grid = 0;  // 0: per-game default resolution
  // Any of "pure", "gap", "le".
  std::vector<std::string> kinds = {"pure"};
};

struct ListGamesCommand {};

struct VerifyCneCommand {
  std::string game;
  // Phases separated by ';', each a comma-separated pure profile of action
  // labels or indices, e.g. "A,A;B,B".
  std::string cycle;
  std::array<std::string, 2> utilities = {"sos", "prod"};
  int k_max = 2;
  int grid = 0;
  double eps = kEquilibriumTolerance;
};

struct StackelbergCommand {
  std::string game;
  int leader = 0;
  TieBreak tie_break = TieBreak::kOptimistic;
  std::array<std::string, 2> utilities = {"sos", "prod"};
  int leader_grid = 0;  // 1: pure commitments only
  int follower_grid = 0;
};

struct HelpCommand {
  std::string text;
};

using Command = std::variant<RunCommand, EquilibriaCommand, ListGamesCommand,
                             VerifyCneCommand, StackelbergCommand,
                             HelpCommand>;

// `args` excludes the program name. Throws UsageError.
Command ParseArgs(const std::vector<std::string>& args);

// Parses a cycle spec against the game's action labels.
CyclicStrategy ParseCycle(const Game& game, const std::string& spec);

// Runs the command; returns the process exit status.
int Execute(const Command& command, std::ostream& out, std::ostream& err);

// ParseArgs + Execute with usage and runtime errors mapped to exit codes
// 2 and 1.
int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

}  // namespace monfg

#endif  // MONFG_CLI_H_
