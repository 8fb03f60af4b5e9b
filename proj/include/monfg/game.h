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

#ifndef MONFG_GAME_H_
#define MONFG_GAME_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace monfg {

using PayoffVector = std::vector<double>;
using JointAction = std::vector<int>;

// A mixed strategy over one player's actions.
class Strategy {
 public:
  Strategy() = default;
  // Throws ValidationError unless probs is a distribution (sum within 1e-9).
  explicit Strategy(std::vector<double> probs);

  static Strategy Pure(int num_actions, int action);
  static Strategy Uniform(int num_actions);

  int NumActions() const { return static_cast<int>(probs_.size()); }
  double operator[](int a) const { return probs_[a]; }
  const std::vector<double>& probs() const { return probs_; }

  // Index of the action holding all the mass, or -1 for a mixed strategy.
  int PureAction() const;

  friend bool operator==(const Strategy&, const Strategy&) = default;

 private:
  std::vector<double> probs_;
};

// One strategy per player; pi = (pi_i, pi_{-i}).
class JointStrategy {
 public:
  JointStrategy() = default;
  explicit JointStrategy(std::vector<Strategy> strategies);

  static JointStrategy Pure(std::span<const int> action_counts,
                            std::span<const int> profile);

  int NumPlayers() const { return static_cast<int>(strategies_.size()); }
  const Strategy& operator[](int player) const { return strategies_[player]; }
  const std::vector<Strategy>& strategies() const { return strategies_; }

  // Copy with player's strategy replaced.
  JointStrategy With(int player, Strategy strategy) const;

  friend bool operator==(const JointStrategy&, const JointStrategy&) = default;

 private:
  std::vector<Strategy> strategies_;
};

// A sequence of joint strategies played in turn, repeating.
class CyclicStrategy {
 public:
  explicit CyclicStrategy(std::vector<JointStrategy> phases);

  int Length() const { return static_cast<int>(phases_.size()); }
  const JointStrategy& operator[](int t) const { return phases_[t]; }
  const std::vector<JointStrategy>& phases() const { return phases_; }

 private:
  std::vector<JointStrategy> phases_;
};

// Finite n-player multi-objective normal-form game. Each player has a
// payoff function from joint pure action profiles to R^d, d >= 2.
// Profiles are flattened row-major: player 0's action is the most
// significant digit.
class Game {
 public:
  // payoffs[player][flat_profile] is that player's payoff vector.
  Game(std::string name, std::vector<int> action_counts, int num_objectives,
       std::vector<std::vector<PayoffVector>> payoffs,
       std::vector<std::vector<std::string>> labels = {});

  const std::string& name() const { return name_; }
  int NumPlayers() const { return static_cast<int>(action_counts_.size()); }
  int NumActions(int player) const { return action_counts_.at(player); }
  const std::vector<int>& action_counts() const { return action_counts_; }
  int NumObjectives() const { return num_objectives_; }
  int NumProfiles() const { return num_profiles_; }

  int FlatIndex(std::span<const int> profile) const;
  JointAction ProfileAt(int flat_index) const;

  // Throws BoundsError for a bad player or out-of-range action.
  const PayoffVector& Payoff(int player, std::span<const int> profile) const;
  std::vector<PayoffVector> Payoffs(std::span<const int> profile) const;
  const PayoffVector& PayoffAt(int player, int flat_index) const {
    return payoffs_[player][flat_index];
  }

  // Action names; defaults to "0", "1", ... when none were given.
  const std::string& ActionLabel(int player, int action) const;
  const std::vector<std::vector<std::string>>& labels() const {
    return labels_;
  }
  // Index of a label or decimal action index; -1 when not found.
  int ActionFromLabel(int player, const std::string& label) const;

  // All players' payoff tensors are identical.
  bool IsTeamReward() const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  std::string name_;
  std::vector<int> action_counts_;
  int num_objectives_ = 0;
  int num_profiles_ = 0;
  std::vector<std::vector<PayoffVector>> payoffs_;
  std::vector<std::vector<std::string>> labels_;
};

// Guards the two-player assumption of the protocol and leadership code.
void RequireTwoPlayers(const Game& game);

}  // namespace monfg

#endif  // MONFG_GAME_H_
