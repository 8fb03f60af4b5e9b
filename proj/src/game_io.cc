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

#include "monfg/game_io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include "monfg/errors.h"

namespace monfg {
namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> Tokenize(std::string_view line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

int ParseInt(const Token& token, int line) {
  int value = 0;
  const char* end = token.text.data() + token.text.size();
  auto [ptr, ec] = std::from_chars(token.text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("expected an integer, got '" + std::string(token.text) + "'",
                     line, token.column);
  }
  return value;
}

double ParseNumber(const Token& token, int line) {
  double value = 0.0;
  const char* end = token.text.data() + token.text.size();
  auto [ptr, ec] = std::from_chars(token.text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ParseError("expected a finite number, got '" +
                         std::string(token.text) + "'",
                     line, token.column);
  }
  return value;
}

struct Header {
  int players = 0;
  int objectives = 0;
  std::vector<int> actions;
  std::string name;
};

Header ParseHeader(const std::vector<Token>& tokens, int line) {
  Header header;
  for (const Token& token : tokens) {
    const size_t eq = token.text.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected key=value in header", line, token.column);
    }
    const std::string_view key = token.text.substr(0, eq);
    const std::string_view value = token.text.substr(eq + 1);
    const Token value_token{value, token.column + static_cast<int>(eq) + 1};
    if (key == "players") {
      header.players = ParseInt(value_token, line);
    } else if (key == "objectives") {
      header.objectives = ParseInt(value_token, line);
    } else if (key == "actions") {
      size_t start = 0;
      while (start <= value.size()) {
        size_t comma = value.find(',', start);
        if (comma == std::string_view::npos) comma = value.size();
        header.actions.push_back(ParseInt(
            {value.substr(start, comma - start),
             value_token.column + static_cast<int>(start)},
            line));
        start = comma + 1;
      }
    } else if (key == "name") {
      header.name = std::string(value);
    } else {
      throw ParseError("unknown header key '" + std::string(key) + "'", line,
                       token.column);
    }
  }
  if (header.players < 1) {
    throw ParseError("header needs players=<n>", line, 1);
  }
  if (static_cast<int>(header.actions.size()) != header.players) {
    throw ParseError("actions= must list one count per player", line, 1);
  }
  for (int count : header.actions) {
    if (count < 1) throw ParseError("action counts must be >= 1", line, 1);
  }
  if (header.objectives < 2) {
    throw ValidationError(
        "a multi-objective game needs objectives >= 2 (line " +
        std::to_string(line) + ")");
  }
  return header;
}

}  // namespace

Game LoadGame(std::string_view text) {
  std::optional<Header> header;
  std::vector<std::vector<std::optional<PayoffVector>>> cells;
  std::vector<std::vector<std::string>> labels;
  int profile_count = 1;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    std::string_view line = raw;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::vector<Token> tokens = Tokenize(line);
    if (tokens.empty()) continue;

    if (!header) {
      header = ParseHeader(tokens, line_number);
      for (int count : header->actions) profile_count *= count;
      cells.assign(header->players,
                   std::vector<std::optional<PayoffVector>>(profile_count));
      continue;
    }

    const std::string_view head = tokens[0].text;
    if (head == "labels") {
      if (tokens.size() < 2 || !tokens[1].text.starts_with("p")) {
        throw ParseError("expected 'labels p<i> ...'", line_number,
                         tokens[0].column);
      }
      const int player =
          ParseInt({tokens[1].text.substr(1), tokens[1].column + 1},
                   line_number) - 1;
      if (player < 0 || player >= header->players) {
        throw ParseError("player out of range", line_number, tokens[1].column);
      }
      if (static_cast<int>(tokens.size()) - 2 != header->actions[player]) {
        throw ParseError("label count differs from action count",
                         line_number, tokens[0].column);
      }
      if (labels.empty()) labels.resize(header->players);
      if (!labels[player].empty()) {
        throw ParseError("labels repeated for player", line_number,
                         tokens[1].column);
      }
      for (size_t k = 2; k < tokens.size(); ++k) {
        labels[player].emplace_back(tokens[k].text);
      }
      continue;
    }

    std::vector<int> players;
    if (head == "team") {
      for (int i = 0; i < header->players; ++i) players.push_back(i);
    } else if (head.starts_with("p")) {
      const int player =
          ParseInt({head.substr(1), tokens[0].column + 1}, line_number) - 1;
      if (player < 0 || player >= header->players) {
        throw ParseError("player out of range", line_number, tokens[0].column);
      }
      players.push_back(player);
    } else {
      throw ParseError("expected 'p<i>', 'team' or 'labels'", line_number,
                       tokens[0].column);
    }

    const size_t expected = 1 + header->players + header->objectives;
    if (tokens.size() != expected) {
      const int column = tokens.size() > expected
                             ? tokens[expected].column
                             : static_cast<int>(line.size()) + 1;
      throw ParseError("expected " + std::to_string(expected) +
                           " fields, got " + std::to_string(tokens.size()),
                       line_number, column);
    }
    int flat = 0;
    for (int i = 0; i < header->players; ++i) {
      const Token& token = tokens[1 + i];
      const int action = ParseInt(token, line_number);
      if (action < 0 || action >= header->actions[i]) {
        throw ParseError("action index out of range", line_number,
                         token.column);
      }
      flat = flat * header->actions[i] + action;
    }
    PayoffVector payoff;
    for (int o = 0; o < header->objectives; ++o) {
      payoff.push_back(ParseNumber(tokens[1 + header->players + o], line_number));
    }
    for (int player : players) {
      if (cells[player][flat]) {
        throw ParseError("payoff given twice for this player and profile",
                         line_number, tokens[0].column);
      }
      cells[player][flat] = payoff;
    }
  }
  if (!header) throw ParseError("missing header line", line_number + 1, 1);

  std::vector<std::vector<PayoffVector>> payoffs(header->players);
  for (int i = 0; i < header->players; ++i) {
    for (int flat = 0; flat < profile_count; ++flat) {
      if (!cells[i][flat]) {
        throw ValidationError("missing payoff for player " +
                              std::to_string(i + 1) + " at profile " +
                              std::to_string(flat));
      }
      payoffs[i].push_back(*cells[i][flat]);
    }
  }
  // Players without a labels line fall back to index labels.
  for (size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].empty()) continue;
    for (int a = 0; a < header->actions[i]; ++a) {
      labels[i].push_back(std::to_string(a));
    }
  }
  return Game(header->name, header->actions, header->objectives,
              std::move(payoffs), std::move(labels));
}

Game LoadGameFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open game file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return LoadGame(buffer.str());
}

std::string FormatDouble(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::string SaveGame(const Game& game) {
  std::ostringstream out;
  out << "players=" << game.NumPlayers()
      << " objectives=" << game.NumObjectives() << " actions=";
  for (int i = 0; i < game.NumPlayers(); ++i) {
    out << (i ? "," : "") << game.NumActions(i);
  }
  if (!game.name().empty()) out << " name=" << game.name();
  out << "\n";
  for (int i = 0; i < game.NumPlayers(); ++i) {
    out << "labels p" << i + 1;
    for (const std::string& label : game.labels()[i]) out << " " << label;
    out << "\n";
  }
  auto write_row = [&](const std::string& head, int player, int flat) {
    out << head;
    for (int a : game.ProfileAt(flat)) out << " " << a;
    for (double x : game.PayoffAt(player, flat)) out << " " << FormatDouble(x);
    out << "\n";
  };
  if (game.IsTeamReward()) {
    for (int flat = 0; flat < game.NumProfiles(); ++flat) {
      write_row("team", 0, flat);
    }
  } else {
    for (int i = 0; i < game.NumPlayers(); ++i) {
      for (int flat = 0; flat < game.NumProfiles(); ++flat) {
        write_row("p" + std::to_string(i + 1), i, flat);
      }
    }
  }
  return out.str();
}

void SaveGameFile(const Game& game, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write game file '" + path + "'");
  out << SaveGame(game);
  if (!out) throw Error("failed writing game file '" + path + "'");
}

}  // namespace monfg
