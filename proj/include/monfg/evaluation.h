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

#ifndef MONFG_EVALUATION_H_
#define MONFG_EVALUATION_H_

#include <span>
#include <vector>

#include "monfg/game.h"
#include "monfg/utility.h"

namespace monfg {

// Expected payoff vector of every player, by exact enumeration of all joint
// pure profiles. Throws DimensionError if the joint strategy does not match
// the game.
std::vector<PayoffVector> ExpectedPayoff(const Game& game,
                                         const JointStrategy& joint);

// Same for an arbitrary (possibly correlated) distribution over flat
// profile indices.
std::vector<PayoffVector> ExpectedPayoffUnder(
    const Game& game, std::span<const double> profile_distribution);

// Probability of every flat profile under independent play.
std::vector<double> ProfileDistribution(const Game& game,
                                        const JointStrategy& joint);

// Scalarised expected returns: u_i(E[p_i]).
std::vector<double> Ser(const Game& game, const JointStrategy& joint,
                        std::span<const UtilityFunction> utilities);

// Expected scalarised returns: E[u_i(p_i)].
std::vector<double> Esr(const Game& game, const JointStrategy& joint,
                        std::span<const UtilityFunction> utilities);

// Utility of the phase-averaged expected payoff vector of a cycle.
std::vector<PayoffVector> CycleExpectedPayoff(const Game& game,
                                              const CyclicStrategy& cycle);
std::vector<double> CycleSer(const Game& game, const CyclicStrategy& cycle,
                             std::span<const UtilityFunction> utilities);

// Applies each player's utility to its vector.
std::vector<double> Scalarise(std::span<const PayoffVector> vectors,
                              std::span<const UtilityFunction> utilities);

}  // namespace monfg

#endif  // MONFG_EVALUATION_H_
