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

#ifndef MONFG_EQUILIBRIUM_H_
#define MONFG_EQUILIBRIUM_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monfg/game.h"
#include "monfg/simplex_grid.h"
#include "monfg/utility.h"

namespace monfg {

// Tolerance for best-response sets and NE certification.
inline constexpr double kEquilibriumTolerance = 1e-9;

enum class EquilibriumKind { kPureNe, kEpsNe, kCne, kLe };
const char* EquilibriumKindName(EquilibriumKind kind);

enum class TieBreak { kOptimistic, kPessimistic };

struct EquilibriumReport {
  EquilibriumKind kind = EquilibriumKind::kEpsNe;
  bool certified = false;
  // One entry for stationary strategies, one per phase for cycles.
  std::vector<JointStrategy> strategies;
  std::vector<double> utilities;
  // Best unilateral improvement found over all players, >= 0.
  double max_deviation_gain = 0.0;
  // Player achieving max_deviation_gain (-1 when no deviation improves)
  // and that player's best deviation, one strategy per deviation phase.
  int best_deviator = -1;
  std::vector<Strategy> best_deviation;
  int search_resolution = 0;
  int deviation_k_max = 0;  // kCne only
  int leader = -1;          // kLe only
  TieBreak tie_break = TieBreak::kOptimistic;  // kLe only
};

struct BestResponse {
  double value = 0.0;
  Strategy strategy;
};

// Expected payoff vector of `player` for each of its pure actions when the
// other players follow `joint` (the player's own entry is ignored).
std::vector<PayoffVector> ActionPayoffs(const Game& game, int player,
                                        const JointStrategy& joint);

// Maximises u(expected payoff) over the player's grid strategies, then
// optionally refines coordinate-wise around the grid argmax with step
// halving down to 1e-6. Grid ties go to the lowest grid index.
BestResponse BestResponseUtility(const Game& game, int player,
                                 const JointStrategy& joint,
                                 const UtilityFunction& u,
                                 const SimplexGrid& grid, bool refine = true);
// Two-player form: `opponent` is the other player's strategy.
BestResponse BestResponseUtility(const Game& game, int player,
                                 const Strategy& opponent,
                                 const UtilityFunction& u,
                                 const SimplexGrid& grid, bool refine = true);

// Every pure profile from which no player gains by a pure or mixed
// deviation. Mixed deviations use each player's default grid plus
// refinement. Sorted lexicographically by profile.
std::vector<EquilibriumReport> FindPureNe(
    const Game& game, std::span<const UtilityFunction> utilities);

// Certified iff max_deviation_gain <= eps. Each player's deviation search
// uses `grid` with refinement.
EquilibriumReport IsEpsilonNe(const Game& game, const JointStrategy& joint,
                              std::span<const UtilityFunction> utilities,
                              double eps, const SimplexGrid& grid);

struct BrGapResult {
  double gap = 0.0;
  JointStrategy argmin;
};

// Minimum over all joint grid strategies of the largest best-response gain
// (two players). A positive value is evidence, at this resolution, that no
// NE exists.
BrGapResult MinBrGap(const Game& game,
                     std::span<const UtilityFunction> utilities,
                     const SimplexGrid& grid, bool refine = true);

// Cyclic NE check. Each player's alternative cycles of length
// k = 1..k_max are searched with per-phase grid strategies plus refinement;
// deviation phase t faces opponent phase t (both cycles repeat, so the joint
// period is lcm(k, cycle length)). Two players only.
// Throws ConfigError when k_max < cycle length.
EquilibriumReport VerifyCne(const Game& game, const CyclicStrategy& cycle,
                            std::span<const UtilityFunction> utilities,
                            double eps, const SimplexGrid& grid, int k_max);

// Leadership (Stackelberg) equilibrium of a two-player game. For every
// leader grid strategy the follower's best-response set on follower_grid
// (within 1e-9 of its optimum) is computed; the leader's value takes the
// best (optimistic) or worst (pessimistic) member for the leader. A leader
// grid of resolution 1 restricts commitments to pure strategies.
EquilibriumReport LeadershipEquilibrium(
    const Game& game, int leader, std::span<const UtilityFunction> utilities,
    const SimplexGrid& leader_grid, const SimplexGrid& follower_grid,
    TieBreak tie_break = TieBreak::kOptimistic);

}  // namespace monfg

#endif  // MONFG_EQUILIBRIUM_H_
