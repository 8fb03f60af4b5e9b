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

#include "monfg/catalog.h"

#include <filesystem>
#include <utility>

#include "monfg/errors.h"
#include "monfg/game_io.h"

namespace monfg {
namespace {

using Cell = PayoffVector;
using Grid = std::vector<std::vector<Cell>>;

const std::vector<std::string> kLmr = {"L", "M", "R"};
const std::vector<std::string> kAb = {"A", "B"};

std::vector<std::string> Labels(const std::vector<std::string>& names,
                                int count) {
  return {names.begin(), names.begin() + count};
}

std::vector<PayoffVector> Flatten(const Grid& grid) {
  std::vector<PayoffVector> flat;
  for (const auto& row : grid) {
    for (const auto& cell : row) flat.push_back(cell);
  }
  return flat;
}

Game TeamGame(std::string name, const Grid& grid,
              const std::vector<std::string>& names) {
  const int rows = static_cast<int>(grid.size());
  const int cols = static_cast<int>(grid.front().size());
  std::vector<PayoffVector> tensor = Flatten(grid);
  return Game(std::move(name), {rows, cols}, 2, {tensor, tensor},
              {Labels(names, rows), Labels(names, cols)});
}

Game TwoTensorGame(std::string name, const Grid& row_payoffs,
                   const Grid& col_payoffs) {
  return Game(std::move(name), {2, 2}, 2,
              {Flatten(row_payoffs), Flatten(col_payoffs)}, {kAb, kAb});
}

}  // namespace

Game BuildBenchmark(int id) {
  switch (id) {
    case 1:
      return TeamGame("game1",
                      {{{4, 0}, {3, 1}, {2, 2}},
                       {{3, 1}, {2, 2}, {1, 3}},
                       {{2, 2}, {1, 3}, {0, 4}}},
                      kLmr);
    case 2:
      return TeamGame("game2", {{{4, 0}, {2, 2}}, {{2, 2}, {0, 4}}},
                      {"L", "R"});
    case 3:
      return TeamGame("game3", {{{4, 0}, {3, 1}}, {{3, 1}, {2, 2}}}, kLmr);
    case 4:
      return TeamGame("game4", {{{4, 1}, {1, 1.5}}, {{3, 1}, {3, 2}}}, kLmr);
    case 5:
      return TeamGame("game5",
                      {{{4, 1}, {1, 1.5}, {2, 1}},
                       {{3, 1}, {3, 2}, {1, 2}},
                       {{1, 2}, {2, 1.5}, {1.5, 3}}},
                      kLmr);
    default:
      throw CatalogError("unknown benchmark game " + std::to_string(id));
  }
}

Game BuildExample(std::string_view id) {
  if (id == "intro") {
    return TwoTensorGame("intro", {{{1, 1}, {0, 1}}, {{1, 0}, {0, 0}}},
                         {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}});
  }
  if (id == "pure_ne") {
    return TwoTensorGame("pure_ne", {{{1, 1}, {1, 1}}, {{0, 0}, {0, 0}}},
                         {{{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}});
  }
  if (id == "cyclic_ne") {
    return TeamGame("cyclic_ne", {{{10, 2}, {0, 0}}, {{0, 0}, {2, 10}}}, kAb);
  }
  if (id == "stackelberg") {
    return TwoTensorGame("stackelberg", {{{2, 0}, {0, 2}}, {{3, 0}, {0, 1}}},
                         {{{2, 0}, {0, 1}}, {{1, 0}, {0, 2}}});
  }
  throw CatalogError("unknown example game '" + std::string(id) + "'");
}

std::vector<CatalogEntry> ListCatalog() {
  return {
      {"game1", "(im)balancing act, 3x3, no NE under SER"},
      {"game2", "(im)balancing act without M, 2x2, no NE under SER"},
      {"game3", "(im)balancing act without R, 2x2, pure NE (L,M)"},
      {"game4", "2x2, pure NE (L,L) and (M,M)"},
      {"game5", "3x3, pure NE (L,L), (M,M), (R,R)"},
      {"intro", "2x2 individual payoffs, matrix representation example"},
      {"pure_ne", "2x2 individual payoffs, pure NE (A,B) under u(x,y)=x+y"},
      {"cyclic_ne", "2x2 team game, cyclic NE {(A,A),(B,B)} under product"},
      {"stackelberg", "2x2 individual payoffs, leadership example"},
  };
}

Game ResolveGame(const std::string& ref) {
  if (ref.size() == 1 && ref[0] >= '1' && ref[0] <= '5') {
    return BuildBenchmark(ref[0] - '0');
  }
  if (ref.size() == 5 && ref.starts_with("game") && ref[4] >= '1' &&
      ref[4] <= '5') {
    return BuildBenchmark(ref[4] - '0');
  }
  for (const CatalogEntry& entry : ListCatalog()) {
    if (entry.id == ref) return BuildExample(ref);
  }
  if (std::filesystem::is_regular_file(ref)) return LoadGameFile(ref);
  throw CatalogError("'" + ref + "' is neither a catalog id nor a game file");
}

}  // namespace monfg
