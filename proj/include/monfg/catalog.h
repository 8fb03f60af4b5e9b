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

#ifndef MONFG_CATALOG_H_
#define MONFG_CATALOG_H_

#include <string>
#include <string_view>
#include <vector>

#include "monfg/game.h"

namespace monfg {

// Benchmark games 1-5: team-reward games over two objectives.
//   1: (im)balancing act, 3x3, no NE under (u1, u2).
//   2: game 1 without M, 2x2, no NE.
//   3: game 1 without R, 2x2, one pure NE (L, M).
//   4: 2x2 with pure NE (L, L) and (M, M).
//   5: 3x3 with pure NE (L, L), (M, M), (R, R).
// Throws CatalogError for an id outside 1..5.
Game BuildBenchmark(int id);

// Illustrative games: "intro", "pure_ne", "cyclic_ne", "stackelberg".
Game BuildExample(std::string_view id);

struct CatalogEntry {
  std::string id;
  std::string description;
};

// All nine catalog games in a fixed order.
std::vector<CatalogEntry> ListCatalog();

// Accepts "3", "game3", an example id, or a path to a game file.
Game ResolveGame(const std::string& ref);

}  // namespace monfg

#endif  // MONFG_CATALOG_H_
