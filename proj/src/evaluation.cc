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

#include "monfg/evaluation.h"

#include "monfg/errors.h"

namespace monfg {
namespace {

void CheckJoint(const Game& game, const JointStrategy& joint) {
  if (joint.NumPlayers() != game.NumPlayers()) {
    throw DimensionError("joint strategy has " +
                         std::to_string(joint.NumPlayers()) +
                         " players, game has " +
                         std::to_string(game.NumPlayers()));
  }
  for (int i = 0; i < game.NumPlayers(); ++i) {
    if (joint[i].NumActions() != game.NumActions(i)) {
      throw DimensionError("strategy of player " + std::to_string(i) +
                           " has the wrong number of actions");
    }
  }
}

void CheckUtilities(const Game& game,
                    std::span<const UtilityFunction> utilities) {
  if (static_cast<int>(utilities.size()) != game.NumPlayers()) {
    throw DimensionError("need one utility per player");
  }
}

}  // namespace

std::vector<double> ProfileDistribution(const Game& game,
                                        const JointStrategy& joint) {
  CheckJoint(game, joint);
  std::vector<double> dist(game.NumProfiles());
  for (int flat = 0; flat < game.NumProfiles(); ++flat) {
    const JointAction profile = game.ProfileAt(flat);
    double weight = 1.0;
    for (int i = 0; i < game.NumPlayers(); ++i) weight *= joint[i][profile[i]];
    dist[flat] = weight;
  }
  return dist;
}

std::vector<PayoffVector> ExpectedPayoffUnder(
    const Game& game, std::span<const double> profile_distribution) {
  if (static_cast<int>(profile_distribution.size()) != game.NumProfiles()) {
    throw DimensionError("distribution does not cover the profile space");
  }
  std::vector<PayoffVector> expected(
      game.NumPlayers(), PayoffVector(game.NumObjectives(), 0.0));
  for (int flat = 0; flat < game.NumProfiles(); ++flat) {
    const double weight = profile_distribution[flat];
    if (weight == 0.0) continue;
    for (int i = 0; i < game.NumPlayers(); ++i) {
      const PayoffVector& cell = game.PayoffAt(i, flat);
      for (int o = 0; o < game.NumObjectives(); ++o) {
        expected[i][o] += weight * cell[o];
      }
    }
  }
  return expected;
}

std::vector<PayoffVector> ExpectedPayoff(const Game& game,
                                         const JointStrategy& joint) {
  return ExpectedPayoffUnder(game, ProfileDistribution(game, joint));
}

std::vector<double> Scalarise(std::span<const PayoffVector> vectors,
                              std::span<const UtilityFunction> utilities) {
  if (vectors.size() != utilities.size()) {
    throw DimensionError("need one utility per player");
  }
  std::vector<double> out;
  for (size_t i = 0; i < vectors.size(); ++i) {
    out.push_back(utilities[i].Eval(vectors[i]));
  }
  return out;
}

std::vector<double> Ser(const Game& game, const JointStrategy& joint,
                        std::span<const UtilityFunction> utilities) {
  CheckUtilities(game, utilities);
  return Scalarise(ExpectedPayoff(game, joint), utilities);
}

std::vector<double> Esr(const Game& game, const JointStrategy& joint,
                        std::span<const UtilityFunction> utilities) {
  CheckUtilities(game, utilities);
  const std::vector<double> dist = ProfileDistribution(game, joint);
  std::vector<double> out(game.NumPlayers(), 0.0);
  for (int flat = 0; flat < game.NumProfiles(); ++flat) {
    if (dist[flat] == 0.0) continue;
    for (int i = 0; i < game.NumPlayers(); ++i) {
      out[i] += dist[flat] * utilities[i].Eval(game.PayoffAt(i, flat));
    }
  }
  return out;
}

std::vector<PayoffVector> CycleExpectedPayoff(const Game& game,
                                              const CyclicStrategy& cycle) {
  std::vector<PayoffVector> mean(game.NumPlayers(),
                                 PayoffVector(game.NumObjectives(), 0.0));
  for (const JointStrategy& phase : cycle.phases()) {
    const std::vector<PayoffVector> phase_payoff = ExpectedPayoff(game, phase);
    for (int i = 0; i < game.NumPlayers(); ++i) {
      for (int o = 0; o < game.NumObjectives(); ++o) {
        mean[i][o] += phase_payoff[i][o];
      }
    }
  }
  for (auto& v : mean) {
    for (double& x : v) x /= cycle.Length();
  }
  return mean;
}

std::vector<double> CycleSer(const Game& game, const CyclicStrategy& cycle,
                             std::span<const UtilityFunction> utilities) {
  CheckUtilities(game, utilities);
  return Scalarise(CycleExpectedPayoff(game, cycle), utilities);
}

}  // namespace monfg
