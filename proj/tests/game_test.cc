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

#include <cmath>
#include <limits>

#include "doctest.h"
#include "monfg/catalog.h"
#include "monfg/errors.h"
#include "monfg/game.h"
#include "monfg/game_io.h"

namespace monfg {
namespace {

PayoffVector Cell(const Game& g, int player, int a, int b) {
  return g.Payoff(player, std::vector<int>{a, b});
}

TEST_CASE("strategy validation") {
  CHECK_NOTHROW(Strategy({0.25, 0.75}));
  CHECK_THROWS_AS(Strategy({0.5, 0.6}), ValidationError);
  CHECK_THROWS_AS(Strategy({-0.1, 1.1}), ValidationError);
  CHECK_THROWS_AS(Strategy({std::nan(""), 1.0}), ValidationError);
  CHECK_THROWS_AS(Strategy(std::vector<double>{}), ValidationError);
  CHECK(Strategy::Pure(3, 2).PureAction() == 2);
  CHECK(Strategy::Uniform(4).PureAction() == -1);
  CHECK(Strategy::Uniform(4)[3] == doctest::Approx(0.25));
  CHECK_THROWS_AS(Strategy::Pure(2, 2), BoundsError);
}

TEST_CASE("cyclic strategy needs a phase") {
  CHECK_THROWS_AS(CyclicStrategy({}), ValidationError);
}

TEST_CASE("game validation") {
  const std::vector<int> counts = {2, 2};
  std::vector<std::vector<PayoffVector>> one_objective(
      2, std::vector<PayoffVector>(4, PayoffVector{1.0}));
  CHECK_THROWS_AS(Game("g", counts, 1, one_objective), ValidationError);

  std::vector<std::vector<PayoffVector>> short_table(
      2, std::vector<PayoffVector>(3, PayoffVector{1.0, 1.0}));
  CHECK_THROWS_AS(Game("g", counts, 2, short_table), ValidationError);

  std::vector<std::vector<PayoffVector>> inf_table(
      2, std::vector<PayoffVector>(4, PayoffVector{1.0, 1.0}));
  inf_table[1][2][0] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Game("g", counts, 2, inf_table), ValidationError);
}

TEST_CASE("payoff lookup bounds") {
  const Game g = BuildBenchmark(2);
  CHECK_THROWS_AS(g.Payoff(0, std::vector<int>{2, 0}), BoundsError);
  CHECK_THROWS_AS(g.Payoff(2, std::vector<int>{0, 0}), BoundsError);
  CHECK_THROWS_AS(g.Payoff(0, std::vector<int>{0}), BoundsError);
}

TEST_CASE("flat index round trip") {
  const Game g = BuildBenchmark(5);
  for (int k = 0; k < g.NumProfiles(); ++k) {
    CHECK(g.FlatIndex(g.ProfileAt(k)) == k);
  }
  CHECK(g.FlatIndex(std::vector<int>{1, 2}) == 5);
}

TEST_CASE("benchmark games match their tables") {
  const Game g1 = BuildBenchmark(1);
  CHECK(g1.IsTeamReward());
  CHECK(Cell(g1, 0, 0, 0) == PayoffVector{4, 0});
  CHECK(Cell(g1, 1, 0, 2) == PayoffVector{2, 2});
  CHECK(Cell(g1, 0, 1, 2) == PayoffVector{1, 3});
  CHECK(Cell(g1, 1, 2, 2) == PayoffVector{0, 4});

  const Game g2 = BuildBenchmark(2);
  CHECK(g2.action_counts() == std::vector<int>{2, 2});
  CHECK(g2.ActionLabel(0, 1) == "R");
  CHECK(Cell(g2, 0, 1, 0) == PayoffVector{2, 2});
  CHECK(Cell(g2, 1, 1, 1) == PayoffVector{0, 4});

  const Game g3 = BuildBenchmark(3);
  CHECK(g3.ActionLabel(1, 1) == "M");
  CHECK(Cell(g3, 0, 0, 1) == PayoffVector{3, 1});
  CHECK(Cell(g3, 1, 1, 1) == PayoffVector{2, 2});

  const Game g4 = BuildBenchmark(4);
  CHECK(Cell(g4, 0, 0, 0) == PayoffVector{4, 1});
  CHECK(Cell(g4, 0, 0, 1) == PayoffVector{1, 1.5});
  CHECK(Cell(g4, 1, 1, 0) == PayoffVector{3, 1});
  CHECK(Cell(g4, 1, 1, 1) == PayoffVector{3, 2});

  const Game g5 = BuildBenchmark(5);
  CHECK(Cell(g5, 0, 0, 2) == PayoffVector{2, 1});
  CHECK(Cell(g5, 0, 1, 2) == PayoffVector{1, 2});
  CHECK(Cell(g5, 1, 2, 0) == PayoffVector{1, 2});
  CHECK(Cell(g5, 1, 2, 1) == PayoffVector{2, 1.5});
  CHECK(Cell(g5, 0, 2, 2) == PayoffVector{1.5, 3});

  CHECK_THROWS_AS(BuildBenchmark(0), CatalogError);
  CHECK_THROWS_AS(BuildBenchmark(6), CatalogError);
}

TEST_CASE("example games match their tables") {
  const Game intro = BuildExample("intro");
  CHECK_FALSE(intro.IsTeamReward());
  CHECK(Cell(intro, 0, 0, 1) == PayoffVector{0, 1});
  CHECK(Cell(intro, 1, 0, 1) == PayoffVector{1, 0});
  CHECK(Cell(intro, 0, 1, 0) == PayoffVector{1, 0});
  CHECK(Cell(intro, 1, 1, 1) == PayoffVector{1, 1});

  const Game pure = BuildExample("pure_ne");
  CHECK(Cell(pure, 0, 0, 1) == PayoffVector{1, 1});
  CHECK(Cell(pure, 1, 0, 1) == PayoffVector{1, 1});
  CHECK(Cell(pure, 1, 0, 0) == PayoffVector{0, 0});

  const Game cyclic = BuildExample("cyclic_ne");
  CHECK(cyclic.IsTeamReward());
  CHECK(Cell(cyclic, 0, 0, 0) == PayoffVector{10, 2});
  CHECK(Cell(cyclic, 1, 0, 0) == PayoffVector{10, 2});
  CHECK(Cell(cyclic, 1, 1, 1) == PayoffVector{2, 10});

  const Game stackelberg = BuildExample("stackelberg");
  CHECK(Cell(stackelberg, 0, 0, 0) == PayoffVector{2, 0});
  CHECK(Cell(stackelberg, 1, 0, 0) == PayoffVector{2, 0});
  CHECK(Cell(stackelberg, 0, 1, 0) == PayoffVector{3, 0});
  CHECK(Cell(stackelberg, 1, 1, 0) == PayoffVector{1, 0});
  CHECK(Cell(stackelberg, 0, 0, 1) == PayoffVector{0, 2});
  CHECK(Cell(stackelberg, 1, 1, 1) == PayoffVector{0, 2});

  CHECK_THROWS_AS(BuildExample("nope"), CatalogError);
}

TEST_CASE("catalog listing and resolution") {
  const auto entries = ListCatalog();
  REQUIRE(entries.size() == 9);
  for (const CatalogEntry& e : entries) {
    CHECK_NOTHROW(ResolveGame(e.id));
  }
  CHECK(ResolveGame("3") == BuildBenchmark(3));
  CHECK(ResolveGame("game3") == BuildBenchmark(3));
  CHECK(ResolveGame("stackelberg") == BuildExample("stackelberg"));
  CHECK_THROWS_AS(ResolveGame("9"), CatalogError);
  CHECK_THROWS_AS(ResolveGame("/no/such/file.game"), CatalogError);
}

TEST_CASE("action labels") {
  const Game g = BuildBenchmark(5);
  CHECK(g.ActionFromLabel(0, "M") == 1);
  CHECK(g.ActionFromLabel(1, "2") == 2);
  CHECK(g.ActionFromLabel(1, "Q") == -1);
  CHECK(g.ActionFromLabel(1, "3") == -1);
}

TEST_CASE("text format round trip for every catalog game") {
  for (const CatalogEntry& e : ListCatalog()) {
    const Game g = ResolveGame(e.id);
    const Game back = LoadGame(SaveGame(g));
    CHECK(back == g);
  }
}

TEST_CASE("text format with comments and labels") {
  const Game g = LoadGame(
      "# a small game\n"
      "players=2 objectives=2 actions=2,1 name=tiny\n"
      "labels p1 up down\n"
      "p1 0 0 1 2   # row payoff\n"
      "p1 1 0 3 4\n"
      "p2 0 0 5 6\n"
      "p2 1 0 7 8.5\n");
  CHECK(g.name() == "tiny");
  CHECK(g.ActionLabel(0, 1) == "down");
  CHECK(g.ActionLabel(1, 0) == "0");
  CHECK(Cell(g, 1, 1, 0) == PayoffVector{7, 8.5});
}

TEST_CASE("parse errors carry positions") {
  try {
    LoadGame("players=2 objectives=2 actions=2,2\np1 0 0 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() >= 1);
  }
  try {
    LoadGame("players=2 objectives=2 actions=2,2\nteam 0 0 1 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 12);
  }
  CHECK_THROWS_AS(LoadGame("players=2 objectives=2 actions=2,2 colour=red\n"),
                  ParseError);
  CHECK_THROWS_AS(LoadGame("players=2 objectives=2 actions=2,2\n"
                           "team 0 0 1 1\nteam 0 0 1 1\n"),
                  ParseError);
  CHECK_THROWS_AS(LoadGame("players=2 objectives=2 actions=2,2\n"
                           "team 0 2 1 1\n"),
                  ParseError);
}

TEST_CASE("structural errors") {
  CHECK_THROWS_AS(LoadGame("players=2 objectives=1 actions=1,1\n"
                           "team 0 0 1\n"),
                  ValidationError);
  CHECK_THROWS_AS(LoadGame("players=2 objectives=2 actions=1,2\n"
                           "team 0 0 1 1\n"),
                  ValidationError);
}

TEST_CASE("shortest round-trip number formatting") {
  CHECK(FormatDouble(0.1) == "0.1");
  CHECK(FormatDouble(11.25) == "11.25");
  CHECK(FormatDouble(3.0) == "3");
  const double x = 1.0 / 3.0;
  CHECK(std::stod(FormatDouble(x)) == x);
}

}  // namespace
}  // namespace monfg
