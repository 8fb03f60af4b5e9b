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

#include "monfg/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "monfg/catalog.h"
#include "monfg/evaluation.h"

namespace monfg {
namespace {

using nlohmann::json;

constexpr char kDefaultOutDir[] = "monfg_out";

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.push_back("");
  return parts;
}

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

std::array<UtilityFunction, 2> Utilities(
    const std::array<std::string, 2>& specs) {
  return {UtilityFunction::Parse(specs[0]), UtilityFunction::Parse(specs[1])};
}

SimplexGrid GridFor(const Game& game, int resolution) {
  if (resolution > 0) return SimplexGrid(resolution);
  return SimplexGrid::DefaultFor(
      std::max(game.NumActions(0), game.NumActions(1)));
}

json StrategyJson(const JointStrategy& joint) {
  json players = json::array();
  for (const Strategy& s : joint.strategies()) players.push_back(s.probs());
  return players;
}

json ReportJson(const Game& game, const EquilibriumReport& report) {
  json j;
  j["kind"] = EquilibriumKindName(report.kind);
  j["certified"] = report.certified;
  json strategies = json::array();
  for (const JointStrategy& joint : report.strategies) {
    strategies.push_back(StrategyJson(joint));
  }
  j["strategies"] = strategies;
  if (report.kind == EquilibriumKind::kPureNe) {
    json labels = json::array();
    const JointStrategy& joint = report.strategies.front();
    for (int i = 0; i < joint.NumPlayers(); ++i) {
      labels.push_back(game.ActionLabel(i, joint[i].PureAction()));
    }
    j["actions"] = labels;
  }
  j["utilities"] = report.utilities;
  j["gap"] = report.max_deviation_gain;
  j["resolution"] = report.search_resolution;
  if (report.kind == EquilibriumKind::kCne) {
    j["k_max"] = report.deviation_k_max;
  }
  if (report.kind == EquilibriumKind::kLe) {
    j["leader"] = report.leader;
    j["tie_break"] = report.tie_break == TieBreak::kOptimistic
                         ? "optimistic"
                         : "pessimistic";
  }
  return j;
}

std::filesystem::path DefaultOutDir() {
  if (const char* env = std::getenv("MONFG_OUT"); env && *env) return env;
  return kDefaultOutDir;
}

int ParseLeader(const std::string& text) {
  if (text == "0" || text == "row") return 0;
  if (text == "1" || text == "col") return 1;
  throw UsageError("--leader must be row, col, 0 or 1");
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void AddUtilities(CLI::App* app, std::vector<std::string>& target) {
  app->add_option("--utilities", target,
                  "Row and column utility: linear:w1,..,wd | sos | prod | sum")
      ->expected(2)
      ->capture_default_str();
}

std::array<std::string, 2> ToPair(const std::vector<std::string>& v) {
  return {v.at(0), v.at(1)};
}

}  // namespace

CyclicStrategy ParseCycle(const Game& game, const std::string& spec) {
  RequireTwoPlayers(game);
  std::vector<JointStrategy> phases;
  for (const std::string& raw : Split(spec, ';')) {
    const std::vector<std::string> labels = Split(Trim(raw), ',');
    if (labels.size() != 2) {
      throw UsageError("cycle phase '" + raw + "' needs two actions");
    }
    JointAction profile(2);
    for (int i = 0; i < 2; ++i) {
      profile[i] = game.ActionFromLabel(i, Trim(labels[i]));
      if (profile[i] < 0) {
        throw UsageError("unknown action '" + labels[i] + "' for player " +
                         std::to_string(i));
      }
    }
    phases.push_back(JointStrategy::Pure(game.action_counts(), profile));
  }
  if (phases.empty()) throw UsageError("empty cycle");
  return CyclicStrategy(std::move(phases));
}

Command ParseArgs(const std::vector<std::string>& args) {
  CLI::App app{"Multi-objective normal-form games: learning protocols and "
               "equilibrium analysis",
               "monfg"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  // run
  const ExperimentConfig defaults;
  ExperimentConfig flags = defaults;
  std::vector<std::string> run_utilities(defaults.utilities.begin(),
                                         defaults.utilities.end());
  double alpha_follower = defaults.rates.follower.q;
  double alpha_top = defaults.rates.top.q;
  double alpha_low = defaults.rates.low.q;
  std::string config_path;
  std::string out_dir;
  CLI::App* run = app.add_subcommand("run", "Run a learning experiment");
  std::vector<std::pair<CLI::Option*, std::function<void(ExperimentConfig&)>>>
      overrides;
  auto bind = [&](CLI::Option* opt, std::function<void(ExperimentConfig&)> f) {
    opt->capture_default_str();
    overrides.emplace_back(opt, std::move(f));
  };
  bind(run->add_option("--game", flags.game,
                       "Game: 1-5, game<N>, an example id or a file"),
       [&](ExperimentConfig& c) { c.game = flags.game; });
  bind(run->add_option("--protocol", flags.protocol,
                       "baseline | coop_action | self_action | coop_policy | "
                       "hier:<low>"),
       [&](ExperimentConfig& c) { c.protocol = flags.protocol; });
  bind(run->add_option("--episodes", flags.episodes, "Episodes per trial"),
       [&](ExperimentConfig& c) { c.episodes = flags.episodes; });
  bind(run->add_option("--trials", flags.trials, "Independent trials"),
       [&](ExperimentConfig& c) { c.trials = flags.trials; });
  bind(run->add_option("--rollouts", flags.rollouts,
                       "Monte-Carlo rollouts per measurement"),
       [&](ExperimentConfig& c) { c.rollouts = flags.rollouts; });
  bind(run->add_option("--alpha-q", flags.rates.base.q,
                       "Q learning rate, baseline and forced communication"),
       [&](ExperimentConfig& c) { c.rates.base.q = flags.rates.base.q; });
  bind(run->add_option("--alpha-theta", flags.rates.base.theta,
                       "Policy learning rate, baseline and forced "
                       "communication"),
       [&](ExperimentConfig& c) {
         c.rates.base.theta = flags.rates.base.theta;
       });
  bind(run->add_option("--alpha-follower", alpha_follower,
                       "Both rates of a self_action follower"),
       [&](ExperimentConfig& c) {
         c.rates.follower = {alpha_follower, alpha_follower};
       });
  bind(run->add_option("--alpha-follower-q", flags.rates.follower.q),
       [&](ExperimentConfig& c) {
         c.rates.follower.q = flags.rates.follower.q;
       });
  bind(run->add_option("--alpha-follower-theta", flags.rates.follower.theta),
       [&](ExperimentConfig& c) {
         c.rates.follower.theta = flags.rates.follower.theta;
       });
  bind(run->add_option("--alpha-top", alpha_top,
                       "Both rates of the hierarchical top level"),
       [&](ExperimentConfig& c) { c.rates.top = {alpha_top, alpha_top}; });
  bind(run->add_option("--alpha-top-q", flags.rates.top.q),
       [&](ExperimentConfig& c) { c.rates.top.q = flags.rates.top.q; });
  bind(run->add_option("--alpha-top-theta", flags.rates.top.theta),
       [&](ExperimentConfig& c) {
         c.rates.top.theta = flags.rates.top.theta;
       });
  bind(run->add_option("--alpha-low", alpha_low,
                       "Both rates of every hierarchical low-level learner"),
       [&](ExperimentConfig& c) { c.rates.low = {alpha_low, alpha_low}; });
  bind(run->add_option("--alpha-low-q", flags.rates.low.q),
       [&](ExperimentConfig& c) { c.rates.low.q = flags.rates.low.q; });
  bind(run->add_option("--alpha-low-theta", flags.rates.low.theta),
       [&](ExperimentConfig& c) {
         c.rates.low.theta = flags.rates.low.theta;
       });
  CLI::Option* run_util_opt =
      run->add_option("--utilities", run_utilities,
                      "Row and column utility: linear:w1,..,wd | sos | "
                      "prod | sum")
          ->expected(2);
  bind(run_util_opt, [&](ExperimentConfig& c) {
    c.utilities = ToPair(run_utilities);
  });
  bind(run->add_option("--seed", flags.seed, "Master seed"),
       [&](ExperimentConfig& c) { c.seed = flags.seed; });
  bind(run->add_option("--measurement-interval", flags.measurement_interval,
                       "Episodes between measurements"),
       [&](ExperimentConfig& c) {
         c.measurement_interval = flags.measurement_interval;
       });
  bind(run->add_option("--last-fraction", flags.last_fraction,
                       "Trailing fraction of episodes in the joint-action "
                       "histogram"),
       [&](ExperimentConfig& c) { c.last_fraction = flags.last_fraction; });
  bind(run->add_option("--leader-offset", flags.leader_offset,
                       "Leader of episode e is (e + offset) mod 2"),
       [&](ExperimentConfig& c) { c.leader_offset = flags.leader_offset; });
  bind(run->add_option("--threads", flags.threads,
                       "Concurrent trials, 0 for all cores"),
       [&](ExperimentConfig& c) { c.threads = flags.threads; });
  run->add_option("--config", config_path,
                  "JSON config; explicit flags take precedence");
  run->add_option("--out", out_dir,
                  "Output directory (default $MONFG_OUT or monfg_out)");

  // equilibria
  EquilibriaCommand eq;
  std::vector<std::string> eq_utilities(eq.utilities.begin(),
                                        eq.utilities.end());
  std::string eq_kinds = "pure";
  CLI::App* equilibria =
      app.add_subcommand("equilibria", "Equilibrium analysis as JSON lines");
  equilibria->add_option("--game", eq.game, "Game reference")->required();
  AddUtilities(equilibria, eq_utilities);
  equilibria->add_option("--grid", eq.grid,
                         "Simplex grid resolution, 0 for the game default")
      ->capture_default_str();
  equilibria->add_option("--kinds", eq_kinds,
                         "Comma-separated subset of pure, gap, le")
      ->capture_default_str();

  // list-games
  CLI::App* list = app.add_subcommand("list-games", "List catalog games");

  // verify-cne
  VerifyCneCommand cne;
  std::vector<std::string> cne_utilities(cne.utilities.begin(),
                                         cne.utilities.end());
  CLI::App* verify =
      app.add_subcommand("verify-cne", "Check a cyclic Nash equilibrium");
  verify->add_option("--game", cne.game, "Game reference")->required();
  verify->add_option("--cycle", cne.cycle,
                     "Pure phases, e.g. \"A,A;B,B\"")
      ->required();
  AddUtilities(verify, cne_utilities);
  verify->add_option("--k-max", cne.k_max, "Longest deviation cycle")
      ->capture_default_str();
  verify->add_option("--grid", cne.grid,
                     "Simplex grid resolution, 0 for the game default")
      ->capture_default_str();
  verify->add_option("--eps", cne.eps, "Certification tolerance")
      ->capture_default_str();

  // stackelberg
  StackelbergCommand se;
  std::vector<std::string> se_utilities(se.utilities.begin(),
                                        se.utilities.end());
  std::string leader = "row";
  std::string tie_break = "optimistic";
  CLI::App* stackelberg =
      app.add_subcommand("stackelberg", "Leadership equilibrium");
  stackelberg->add_option("--game", se.game, "Game reference")->required();
  stackelberg->add_option("--leader", leader, "row or col")
      ->capture_default_str();
  stackelberg->add_option("--tie-break", tie_break,
                          "optimistic or pessimistic")
      ->capture_default_str();
  AddUtilities(stackelberg, se_utilities);
  stackelberg->add_option("--leader-grid", se.leader_grid,
                          "Leader grid resolution, 1 for pure commitments, "
                          "0 for the game default")
      ->capture_default_str();
  stackelberg->add_option("--follower-grid", se.follower_grid,
                          "Follower grid resolution, 0 for the game default")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return HelpCommand{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return HelpCommand{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  try {
    if (run->parsed()) {
      RunCommand command;
      command.config = config_path.empty()
                           ? defaults
                           : ConfigFromJson(ReadText(config_path), defaults);
      for (auto& [opt, apply] : overrides) {
        if (opt->count() > 0) apply(command.config);
      }
      command.config.Validate();
      ResolveGame(command.config.game);
      command.out = out_dir.empty() ? DefaultOutDir()
                                    : std::filesystem::path(out_dir);
      return command;
    }
    if (equilibria->parsed()) {
      eq.utilities = ToPair(eq_utilities);
      Utilities(eq.utilities);
      eq.kinds = Split(eq_kinds, ',');
      for (std::string& k : eq.kinds) {
        k = Trim(k);
        if (k != "pure" && k != "gap" && k != "le") {
          throw UsageError("unknown equilibrium kind '" + k + "'");
        }
      }
      if (eq.grid < 0) throw UsageError("--grid must be >= 0");
      return eq;
    }
    if (list->parsed()) return ListGamesCommand{};
    if (verify->parsed()) {
      cne.utilities = ToPair(cne_utilities);
      Utilities(cne.utilities);
      if (cne.k_max < 1) throw UsageError("--k-max must be >= 1");
      if (cne.grid < 0) throw UsageError("--grid must be >= 0");
      return cne;
    }
    se.utilities = ToPair(se_utilities);
    Utilities(se.utilities);
    se.leader = ParseLeader(leader);
    if (tie_break == "optimistic") {
      se.tie_break = TieBreak::kOptimistic;
    } else if (tie_break == "pessimistic") {
      se.tie_break = TieBreak::kPessimistic;
    } else {
      throw UsageError("--tie-break must be optimistic or pessimistic");
    }
    if (se.leader_grid < 0 || se.follower_grid < 0) {
      throw UsageError("grid resolutions must be >= 0");
    }
    return se;
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

int Execute(const Command& command, std::ostream& out, std::ostream& err) {
  return std::visit(
      [&](const auto& cmd) -> int {
        using T = std::decay_t<decltype(cmd)>;
        if constexpr (std::is_same_v<T, HelpCommand>) {
          out << cmd.text;
          return 0;
        } else if constexpr (std::is_same_v<T, ListGamesCommand>) {
          for (const CatalogEntry& entry : ListCatalog()) {
            out << entry.id << '\t' << entry.description << '\n';
          }
          return 0;
        } else if constexpr (std::is_same_v<T, RunCommand>) {
          const Game game = ResolveGame(cmd.config.game);
          const ExperimentResult result = RunExperiment(cmd.config, game);
          WriteOutputs(result, game, cmd.out);
          std::array<double, 2> final_ser{};
          for (const SummaryRow& row : result.summary) {
            final_ser[row.agent] = row.ser_mc_mean;
          }
          err << "final mean SER: agent 0 " << final_ser[0] << ", agent 1 "
              << final_ser[1] << " (outputs in " << cmd.out.string()
              << ")\n";
          return 0;
        } else if constexpr (std::is_same_v<T, EquilibriaCommand>) {
          const Game game = ResolveGame(cmd.game);
          const auto u = Utilities(cmd.utilities);
          int found = 0;
          for (const std::string& kind : cmd.kinds) {
            if (kind == "pure") {
              for (const EquilibriumReport& r : FindPureNe(game, u)) {
                out << ReportJson(game, r).dump() << '\n';
                ++found;
              }
            } else if (kind == "gap") {
              const SimplexGrid grid = GridFor(game, cmd.grid);
              const BrGapResult gap = MinBrGap(game, u, grid);
              json j;
              j["kind"] = "min_br_gap";
              j["strategies"] = json::array({StrategyJson(gap.argmin)});
              j["utilities"] = Ser(game, gap.argmin, u);
              j["gap"] = gap.gap;
              j["resolution"] = grid.resolution();
              out << j.dump() << '\n';
            } else {
              const SimplexGrid grid = GridFor(game, cmd.grid);
              for (int leader = 0; leader < 2; ++leader) {
                const EquilibriumReport r =
                    LeadershipEquilibrium(game, leader, u, grid, grid);
                out << ReportJson(game, r).dump() << '\n';
                ++found;
              }
            }
          }
          err << found << " equilibria found\n";
          return 0;
        } else if constexpr (std::is_same_v<T, VerifyCneCommand>) {
          const Game game = ResolveGame(cmd.game);
          const CyclicStrategy cycle = ParseCycle(game, cmd.cycle);
          const EquilibriumReport r =
              VerifyCne(game, cycle, Utilities(cmd.utilities), cmd.eps,
                        GridFor(game, cmd.grid), cmd.k_max);
          out << ReportJson(game, r).dump() << '\n';
          err << (r.certified ? "certified" : "not certified") << '\n';
          return 0;
        } else {
          const Game game = ResolveGame(cmd.game);
          const int follower = 1 - cmd.leader;
          const SimplexGrid leader_grid =
              cmd.leader_grid > 0
                  ? SimplexGrid(cmd.leader_grid)
                  : SimplexGrid::DefaultFor(game.NumActions(cmd.leader));
          const SimplexGrid follower_grid =
              cmd.follower_grid > 0
                  ? SimplexGrid(cmd.follower_grid)
                  : SimplexGrid::DefaultFor(game.NumActions(follower));
          const EquilibriumReport r = LeadershipEquilibrium(
              game, cmd.leader, Utilities(cmd.utilities), leader_grid,
              follower_grid, cmd.tie_break);
          out << ReportJson(game, r).dump() << '\n';
          err << "leader utility " << r.utilities.at(cmd.leader) << '\n';
          return 0;
        }
      },
      command);
}

int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  Command command;
  try {
    command = ParseArgs(args);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nrun with --help for usage\n";
    return 2;
  }
  try {
    return Execute(command, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace monfg
