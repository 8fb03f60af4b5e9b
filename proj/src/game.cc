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

#include "monfg/game.h"

#include <cmath>
#include <numeric>
#include <utility>

#include "monfg/errors.h"

namespace monfg {
namespace {

constexpr double kSumTolerance = 1e-9;

}  // namespace

Strategy::Strategy(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw ValidationError("strategy over zero actions");
  double total = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw ValidationError("strategy has a negative or non-finite entry");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw ValidationError("strategy sums to " + std::to_string(total));
  }
}

Strategy Strategy::Pure(int num_actions, int action) {
  if (action < 0 || action >= num_actions) {
    throw BoundsError("pure action " + std::to_string(action) +
                      " out of range");
  }
  std::vector<double> probs(num_actions, 0.0);
  probs[action] = 1.0;
  return Strategy(std::move(probs));
}

Strategy Strategy::Uniform(int num_actions) {
  if (num_actions <= 0) throw ValidationError("strategy over zero actions");
  return Strategy(std::vector<double>(num_actions, 1.0 / num_actions));
}

int Strategy::PureAction() const {
  for (int a = 0; a < NumActions(); ++a) {
    if (probs_[a] == 1.0) return a;
  }
  return -1;
}

JointStrategy::JointStrategy(std::vector<Strategy> strategies)
    : strategies_(std::move(strategies)) {
  if (strategies_.empty()) throw ValidationError("joint strategy is empty");
  for (const Strategy& s : strategies_) {
    if (s.NumActions() == 0) {
      throw ValidationError("joint strategy holds an empty strategy");
    }
  }
}

JointStrategy JointStrategy::Pure(std::span<const int> action_counts,
                                  std::span<const int> profile) {
  if (action_counts.size() != profile.size()) {
    throw DimensionError("profile length differs from player count");
  }
  std::vector<Strategy> strategies;
  for (size_t i = 0; i < profile.size(); ++i) {
    strategies.push_back(Strategy::Pure(action_counts[i], profile[i]));
  }
  return JointStrategy(std::move(strategies));
}

JointStrategy JointStrategy::With(int player, Strategy strategy) const {
  JointStrategy copy = *this;
  copy.strategies_.at(player) = std::move(strategy);
  return copy;
}

CyclicStrategy::CyclicStrategy(std::vector<JointStrategy> phases)
    : phases_(std::move(phases)) {
  if (phases_.empty()) throw ValidationError("cyclic strategy has no phases");
  for (const JointStrategy& phase : phases_) {
    if (phase.NumPlayers() != phases_.front().NumPlayers()) {
      throw ValidationError("cyclic phases disagree on player count");
    }
  }
}

Game::Game(std::string name, std::vector<int> action_counts,
           int num_objectives, std::vector<std::vector<PayoffVector>> payoffs,
           std::vector<std::vector<std::string>> labels)
    : name_(std::move(name)),
      action_counts_(std::move(action_counts)),
      num_objectives_(num_objectives),
      payoffs_(std::move(payoffs)),
      labels_(std::move(labels)) {
  if (action_counts_.empty()) throw ValidationError("game has no players");
  if (num_objectives_ < 2) {
    throw ValidationError("a multi-objective game needs d >= 2, got d = " +
                          std::to_string(num_objectives_));
  }
  num_profiles_ = 1;
  for (int count : action_counts_) {
    if (count < 1) throw ValidationError("player with no actions");
    num_profiles_ *= count;
  }
  if (static_cast<int>(payoffs_.size()) != NumPlayers()) {
    throw ValidationError("payoff tensor count differs from player count");
  }
  for (const auto& tensor : payoffs_) {
    if (static_cast<int>(tensor.size()) != num_profiles_) {
      throw ValidationError("payoff tensor does not cover every profile");
    }
    for (const PayoffVector& v : tensor) {
      if (static_cast<int>(v.size()) != num_objectives_) {
        throw ValidationError("payoff vector length differs from d");
      }
      for (double x : v) {
        if (!std::isfinite(x)) throw ValidationError("non-finite payoff");
      }
    }
  }
  if (labels_.empty()) {
    for (int count : action_counts_) {
      std::vector<std::string> names;
      for (int a = 0; a < count; ++a) names.push_back(std::to_string(a));
      labels_.push_back(std::move(names));
    }
  }
  if (static_cast<int>(labels_.size()) != NumPlayers()) {
    throw ValidationError("label sets differ from player count");
  }
  for (int i = 0; i < NumPlayers(); ++i) {
    if (static_cast<int>(labels_[i].size()) != action_counts_[i]) {
      throw ValidationError("label count differs from action count");
    }
  }
}

int Game::FlatIndex(std::span<const int> profile) const {
  if (static_cast<int>(profile.size()) != NumPlayers()) {
    throw BoundsError("profile length differs from player count");
  }
  int index = 0;
  for (int i = 0; i < NumPlayers(); ++i) {
    if (profile[i] < 0 || profile[i] >= action_counts_[i]) {
      throw BoundsError("action " + std::to_string(profile[i]) +
                        " out of range for player " + std::to_string(i));
    }
    index = index * action_counts_[i] + profile[i];
  }
  return index;
}

JointAction Game::ProfileAt(int flat_index) const {
  if (flat_index < 0 || flat_index >= num_profiles_) {
    throw BoundsError("profile index out of range");
  }
  JointAction profile(NumPlayers());
  for (int i = NumPlayers() - 1; i >= 0; --i) {
    profile[i] = flat_index % action_counts_[i];
    flat_index /= action_counts_[i];
  }
  return profile;
}

const PayoffVector& Game::Payoff(int player,
                                 std::span<const int> profile) const {
  if (player < 0 || player >= NumPlayers()) {
    throw BoundsError("player index out of range");
  }
  return payoffs_[player][FlatIndex(profile)];
}

std::vector<PayoffVector> Game::Payoffs(std::span<const int> profile) const {
  const int index = FlatIndex(profile);
  std::vector<PayoffVector> out;
  for (int i = 0; i < NumPlayers(); ++i) out.push_back(payoffs_[i][index]);
  return out;
}

const std::string& Game::ActionLabel(int player, int action) const {
  return labels_.at(player).at(action);
}

int Game::ActionFromLabel(int player, const std::string& label) const {
  const auto& names = labels_.at(player);
  for (int a = 0; a < static_cast<int>(names.size()); ++a) {
    if (names[a] == label) return a;
  }
  if (!label.empty() &&
      label.find_first_not_of("0123456789") == std::string::npos) {
    const int a = std::stoi(label);
    if (a < action_counts_[player]) return a;
  }
  return -1;
}

bool Game::IsTeamReward() const {
  for (int i = 1; i < NumPlayers(); ++i) {
    if (payoffs_[i] != payoffs_[0]) return false;
  }
  return true;
}

void RequireTwoPlayers(const Game& game) {
  if (game.NumPlayers() != 2) {
    throw ValidationError("this operation supports two-player games only");
  }
}

}  // namespace monfg
