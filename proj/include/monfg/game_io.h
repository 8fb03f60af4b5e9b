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

#ifndef MONFG_GAME_IO_H_
#define MONFG_GAME_IO_H_

#include <string>
#include <string_view>

#include "monfg/game.h"

namespace monfg {

// Plain-text game format, one record per line, '#' starts a comment:
//
//   players=2 objectives=2 actions=2,2 [name=<id>]
//   labels p1 L R                       (optional, one per player)
//   p1 0 1 2 2                          (player, actions..., payoff vector)
//   team 1 1 0 4                        (same vector for every player)
//
// Players are numbered from 1, actions from 0. Every (player, profile)
// pair must be given exactly once. See docs/game_format.md.
//
// Throws ParseError for malformed lines and ValidationError for a
// structurally invalid game (d < 2, missing or duplicate cells).
Game LoadGame(std::string_view text);
Game LoadGameFile(const std::string& path);

// Shortest round-trip decimal formatting; `team` rows for team games.
std::string SaveGame(const Game& game);
void SaveGameFile(const Game& game, const std::string& path);

// Shortest decimal string that parses back to exactly `value`.
std::string FormatDouble(double value);

}  // namespace monfg

#endif  // MONFG_GAME_IO_H_
