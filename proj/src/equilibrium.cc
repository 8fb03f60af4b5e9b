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

#include "monfg/equilibrium.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "monfg/errors.h"
#include "monfg/evaluation.h"

namespace monfg {
namespace {

using Points = std::vector<std::vector<double>>;

// sum_a weights[a] * vectors[a]
PayoffVector Combine(std::span<const double> weights,
                     std::span<const PayoffVector> vectors) {
  PayoffVector out(vectors.front().size(), 0.0);
  for (size_t a = 0; a < weights.size(); ++a) {
    if (weights[a] == 0.0) continue;
    for (size_t o = 0; o < out.size(); ++o) out[o] += weights[a] * vectors[a][o];
  }
  return out;
}

BestResponse BestResponseOnPoints(const std::vector<PayoffVector>& action_payoffs,
                                  const UtilityFunction& u,
                                  const Points& points, double step,
                                  bool refine) {
  size_t best_index = 0;
  double best = -std::numeric_limits<double>::infinity();
  for (size_t g = 0; g < points.size(); ++g) {
    const double value = u.Eval(Combine(points[g], action_payoffs));
    if (value > best) {
      best = value;
      best_index = g;
    }
  }
  Points point = {points[best_index]};
  if (refine) {
    best = RefineOnSimplices(
        [&](const Points& p) { return u.Eval(Combine(p[0], action_payoffs)); },
        point, step);
  }
  return {best, Strategy(point[0])};
}

void CheckUtilities(const Game& game,
                    std::span<const UtilityFunction> utilities) {
  if (static_cast<int>(utilities.size()) != game.NumPlayers()) {
    throw DimensionError("need one utility per player");
  }
}

JointAction TwoPlayerProfile(int first_player, int first_action,
                             int second_action) {
  return first_player == 0 ? JointAction{first_action, second_action}
                           : JointAction{second_action, first_action};
}

}  // namespace

const char* EquilibriumKindName(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::kPureNe:
      return "pure_ne";
    case EquilibriumKind::kEpsNe:
      return "eps_ne";
    case EquilibriumKind::kCne:
      return "cne";
    case EquilibriumKind::kLe:
      return "le";
  }
  return "";
}

std::vector<PayoffVector> ActionPayoffs(const Game& game, int player,
                                        const JointStrategy& joint) {
  if (joint.NumPlayers() != game.NumPlayers()) {
    throw DimensionError("joint strategy does not match the game");
  }
  for (int j = 0; j < game.NumPlayers(); ++j) {
    if (j != player && joint[j].NumActions() != game.NumActions(j)) {
      throw DimensionError("strategy size does not match action count");
    }
  }
  std::vector<PayoffVector> out(game.NumActions(player),
                                PayoffVector(game.NumObjectives(), 0.0));
  for (int flat = 0; flat < game.NumProfiles(); ++flat) {
    const JointAction profile = game.ProfileAt(flat);
    double weight = 1.0;
    for (int j = 0; j < game.NumPlayers(); ++j) {
      if (j != player) weight *= joint[j][profile[j]];
    }
    if (weight == 0.0) continue;
    const PayoffVector& cell = game.PayoffAt(player, flat);
    for (int o = 0; o < game.NumObjectives(); ++o) {
      out[profile[player]][o] += weight * cell[o];
    }
  }
  return out;
}

BestResponse BestResponseUtility(const Game& game, int player,
                                 const JointStrategy& joint,
                                 const UtilityFunction& u,
                                 const SimplexGrid& grid, bool refine) {
  if (player < 0 || player >= game.NumPlayers()) {
    throw BoundsError("player index out of range");
  }
  return BestResponseOnPoints(ActionPayoffs(game, player, joint), u,
                              grid.Points(game.NumActions(player)),
                              grid.step(), refine);
}

BestResponse BestResponseUtility(const Game& game, int player,
                                 const Strategy& opponent,
                                 const UtilityFunction& u,
                                 const SimplexGrid& grid, bool refine) {
  RequireTwoPlayers(game);
  std::vector<Strategy> strategies(2, opponent);
  strategies[player] = Strategy::Uniform(game.NumActions(player));
  return BestResponseUtility(game, player, JointStrategy(strategies), u, grid,
                             refine);
}

std::vector<EquilibriumReport> FindPureNe(
    const Game& game, std::span<const UtilityFunction> utilities) {
  CheckUtilities(game, utilities);
  std::vector<EquilibriumReport> found;
  for (int flat = 0; flat < game.NumProfiles(); ++flat) {
    const JointAction profile = game.ProfileAt(flat);
    std::vector<double> current(game.NumPlayers());
    for (int i = 0; i < game.NumPlayers(); ++i) {
      current[i] = utilities[i].Eval(game.PayoffAt(i, flat));
    }

    bool pure_deviation = false;
    for (int i = 0; i < game.NumPlayers() && !pure_deviation; ++i) {
      JointAction deviation = profile;
      for (int a = 0; a < game.NumActions(i); ++a) {
        deviation[i] = a;
        if (utilities[i].Eval(game.Payoff(i, deviation)) >
            current[i] + kEquilibriumTolerance) {
          pure_deviation = true;
          break;
        }
      }
    }
    if (pure_deviation) continue;

    const JointStrategy joint =
        JointStrategy::Pure(game.action_counts(), profile);
    EquilibriumReport report;
    report.kind = EquilibriumKind::kPureNe;
    report.strategies = {joint};
    report.utilities = current;
    for (int i = 0; i < game.NumPlayers(); ++i) {
      const SimplexGrid grid = SimplexGrid::DefaultFor(game.NumActions(i));
      report.search_resolution =
          std::max(report.search_resolution, grid.resolution());
      const BestResponse br =
          BestResponseUtility(game, i, joint, utilities[i], grid, true);
      const double gain = std::max(0.0, br.value - current[i]);
      if (gain > report.max_deviation_gain) {
        report.max_deviation_gain = gain;
        report.best_deviator = i;
        report.best_deviation = {br.strategy};
      }
    }
    report.certified = report.max_deviation_gain <= kEquilibriumTolerance;
    if (report.certified) found.push_back(std::move(report));
  }
  return found;
}

EquilibriumReport IsEpsilonNe(const Game& game, const JointStrategy& joint,
                              std::span<const UtilityFunction> utilities,
                              double eps, const SimplexGrid& grid) {
  CheckUtilities(game, utilities);
  EquilibriumReport report;
  report.kind = EquilibriumKind::kEpsNe;
  report.strategies = {joint};
  report.utilities = Ser(game, joint, utilities);
  report.search_resolution = grid.resolution();
  for (int i = 0; i < game.NumPlayers(); ++i) {
    const BestResponse br =
        BestResponseUtility(game, i, joint, utilities[i], grid, true);
    const double gain = std::max(0.0, br.value - report.utilities[i]);
    if (gain > report.max_deviation_gain) {
      report.max_deviation_gain = gain;
      report.best_deviator = i;
      report.best_deviation = {br.strategy};
    }
  }
  report.certified = report.max_deviation_gain <= eps;
  return report;
}

BrGapResult MinBrGap(const Game& game,
                     std::span<const UtilityFunction> utilities,
                     const SimplexGrid& grid, bool refine) {
  RequireTwoPlayers(game);
  CheckUtilities(game, utilities);
  const int m0 = game.NumActions(0);
  const int m1 = game.NumActions(1);
  const int d = game.NumObjectives();
  const Points points0 = grid.Points(m0);
  const Points points1 = grid.Points(m1);

  // Best-response values depend only on the opponent's strategy.
  std::vector<double> br0(points1.size()), br1(points0.size());
  for (size_t j = 0; j < points1.size(); ++j) {
    const JointStrategy joint({Strategy::Uniform(m0), Strategy(points1[j])});
    br0[j] = BestResponseOnPoints(ActionPayoffs(game, 0, joint), utilities[0],
                                  points0, grid.step(), refine)
                 .value;
  }
  for (size_t i = 0; i < points0.size(); ++i) {
    const JointStrategy joint({Strategy(points0[i]), Strategy::Uniform(m1)});
    br1[i] = BestResponseOnPoints(ActionPayoffs(game, 1, joint), utilities[1],
                                  points1, grid.step(), refine)
                 .value;
  }

  double best_gap = std::numeric_limits<double>::infinity();
  size_t best_i = 0, best_j = 0;
  // column[k][b] = sum_a x_a p_k(a, b) for the current row strategy x.
  std::vector<std::vector<PayoffVector>> column(
      2, std::vector<PayoffVector>(m1, PayoffVector(d)));
  PayoffVector e0(d), e1(d);
  for (size_t i = 0; i < points0.size(); ++i) {
    for (int k = 0; k < 2; ++k) {
      for (int b = 0; b < m1; ++b) {
        std::fill(column[k][b].begin(), column[k][b].end(), 0.0);
        for (int a = 0; a < m0; ++a) {
          const PayoffVector& cell = game.PayoffAt(k, a * m1 + b);
          for (int o = 0; o < d; ++o) column[k][b][o] += points0[i][a] * cell[o];
        }
      }
    }
    for (size_t j = 0; j < points1.size(); ++j) {
      std::fill(e0.begin(), e0.end(), 0.0);
      std::fill(e1.begin(), e1.end(), 0.0);
      for (int b = 0; b < m1; ++b) {
        const double y = points1[j][b];
        for (int o = 0; o < d; ++o) {
          e0[o] += y * column[0][b][o];
          e1[o] += y * column[1][b][o];
        }
      }
      const double gap = std::max({0.0, br0[j] - utilities[0].Eval(e0),
                                   br1[i] - utilities[1].Eval(e1)});
      if (gap < best_gap) {
        best_gap = gap;
        best_i = i;
        best_j = j;
      }
    }
  }
  return {best_gap, JointStrategy({Strategy(points0[best_i]),
                                   Strategy(points1[best_j])})};
}

EquilibriumReport VerifyCne(const Game& game, const CyclicStrategy& cycle,
                            std::span<const UtilityFunction> utilities,
                            double eps, const SimplexGrid& grid, int k_max) {
  RequireTwoPlayers(game);
  CheckUtilities(game, utilities);
  const int length = cycle.Length();
  if (k_max < length) {
    throw ConfigError("deviation_k_max (" + std::to_string(k_max) +
                      ") is shorter than the cycle (" +
                      std::to_string(length) + ")");
  }
  constexpr double kMaxCombinations = 2e8;

  EquilibriumReport report;
  report.kind = EquilibriumKind::kCne;
  report.strategies = cycle.phases();
  report.utilities = CycleSer(game, cycle, utilities);
  report.search_resolution = grid.resolution();
  report.deviation_k_max = k_max;

  for (int player = 0; player < 2; ++player) {
    const int m = game.NumActions(player);
    const Points points = grid.Points(m);
    const UtilityFunction& u = utilities[player];
    for (int k = 1; k <= k_max; ++k) {
      if (std::pow(static_cast<double>(points.size()), k) > kMaxCombinations) {
        throw ConfigError("cyclic deviation search too large; use a coarser "
                          "grid or a smaller k_max");
      }
      const int period = std::lcm(k, length);
      // aggregated[j][a]: mean contribution of action a in deviation phase j.
      std::vector<std::vector<PayoffVector>> aggregated(
          k, std::vector<PayoffVector>(m, PayoffVector(game.NumObjectives(), 0.0)));
      for (int t = 0; t < period; ++t) {
        const auto q = ActionPayoffs(game, player, cycle[t % length]);
        for (int a = 0; a < m; ++a) {
          for (int o = 0; o < game.NumObjectives(); ++o) {
            aggregated[t % k][a][o] += q[a][o] / period;
          }
        }
      }
      // phase_vectors[j][g] = sum_a points[g][a] aggregated[j][a]
      std::vector<std::vector<PayoffVector>> phase_vectors(k);
      for (int j = 0; j < k; ++j) {
        for (const auto& point : points) {
          phase_vectors[j].push_back(Combine(point, aggregated[j]));
        }
      }
      std::vector<size_t> index(k, 0), best_index(k, 0);
      double best = -std::numeric_limits<double>::infinity();
      PayoffVector total(game.NumObjectives());
      while (true) {
        std::fill(total.begin(), total.end(), 0.0);
        for (int j = 0; j < k; ++j) {
          for (int o = 0; o < game.NumObjectives(); ++o) {
            total[o] += phase_vectors[j][index[j]][o];
          }
        }
        const double value = u.Eval(total);
        if (value > best) {
          best = value;
          best_index = index;
        }
        int pos = k - 1;
        while (pos >= 0 && ++index[pos] == points.size()) index[pos--] = 0;
        if (pos < 0) break;
      }
      Points deviation;
      for (int j = 0; j < k; ++j) deviation.push_back(points[best_index[j]]);
      best = RefineOnSimplices(
          [&](const Points& phases) {
            PayoffVector sum(game.NumObjectives(), 0.0);
            for (int j = 0; j < k; ++j) {
              const PayoffVector v = Combine(phases[j], aggregated[j]);
              for (int o = 0; o < game.NumObjectives(); ++o) sum[o] += v[o];
            }
            return u.Eval(sum);
          },
          deviation, grid.step());
      const double gain = std::max(0.0, best - report.utilities[player]);
      if (gain > report.max_deviation_gain) {
        report.max_deviation_gain = gain;
        report.best_deviator = player;
        report.best_deviation.clear();
        for (const auto& phase : deviation) {
          report.best_deviation.emplace_back(phase);
        }
      }
    }
  }
  report.certified = report.max_deviation_gain <= eps;
  return report;
}

EquilibriumReport LeadershipEquilibrium(
    const Game& game, int leader, std::span<const UtilityFunction> utilities,
    const SimplexGrid& leader_grid, const SimplexGrid& follower_grid,
    TieBreak tie_break) {
  RequireTwoPlayers(game);
  CheckUtilities(game, utilities);
  if (leader != 0 && leader != 1) throw BoundsError("leader must be 0 or 1");
  const int follower = 1 - leader;
  const int ml = game.NumActions(leader);
  const int mf = game.NumActions(follower);
  const Points leader_points = leader_grid.Points(ml);
  const Points follower_points = follower_grid.Points(mf);

  double best_leader_value = -std::numeric_limits<double>::infinity();
  size_t best_leader = 0, best_follower = 0;
  std::vector<PayoffVector> follower_q(mf), leader_q(mf);
  std::vector<double> follower_values(follower_points.size());
  for (size_t x = 0; x < leader_points.size(); ++x) {
    for (int b = 0; b < mf; ++b) {
      std::vector<PayoffVector> f_cells, l_cells;
      for (int a = 0; a < ml; ++a) {
        const JointAction profile = TwoPlayerProfile(leader, a, b);
        f_cells.push_back(game.Payoff(follower, profile));
        l_cells.push_back(game.Payoff(leader, profile));
      }
      follower_q[b] = Combine(leader_points[x], f_cells);
      leader_q[b] = Combine(leader_points[x], l_cells);
    }
    double follower_best = -std::numeric_limits<double>::infinity();
    for (size_t y = 0; y < follower_points.size(); ++y) {
      follower_values[y] =
          utilities[follower].Eval(Combine(follower_points[y], follower_q));
      follower_best = std::max(follower_best, follower_values[y]);
    }
    double value = 0.0;
    size_t chosen = follower_points.size();
    for (size_t y = 0; y < follower_points.size(); ++y) {
      if (follower_values[y] < follower_best - kEquilibriumTolerance) continue;
      const double leader_value =
          utilities[leader].Eval(Combine(follower_points[y], leader_q));
      const bool better = tie_break == TieBreak::kOptimistic
                              ? leader_value > value
                              : leader_value < value;
      if (chosen == follower_points.size() || better) {
        value = leader_value;
        chosen = y;
      }
    }
    if (value > best_leader_value) {
      best_leader_value = value;
      best_leader = x;
      best_follower = chosen;
    }
  }

  std::vector<Strategy> strategies(2);
  strategies[leader] = Strategy(leader_points[best_leader]);
  strategies[follower] = Strategy(follower_points[best_follower]);
  EquilibriumReport report;
  report.kind = EquilibriumKind::kLe;
  report.certified = true;
  report.strategies = {JointStrategy(strategies)};
  report.utilities = Ser(game, report.strategies.front(), utilities);
  report.search_resolution = leader_grid.resolution();
  report.leader = leader;
  report.tie_break = tie_break;
  return report;
}

}  // namespace monfg
