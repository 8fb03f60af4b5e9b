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

#ifndef MONFG_AGENTS_H_
#define MONFG_AGENTS_H_

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "monfg/game.h"
#include "monfg/utility.h"

namespace monfg {

using Theta = std::vector<double>;
// One payoff-dimension vector per own action.
using ActionVectors = std::vector<PayoffVector>;

// Vector-valued Q-table indexed by (own action, context). The context is
// the opponent's action for joint-action learners, the observed message
// (plus a trailing None slot) for message-conditioned learners, and a
// single dummy column for per-action and protocol-level tables.
class QTable {
 public:
  QTable() = default;
  QTable(int num_actions, int num_contexts, int num_objectives);

  int NumActions() const { return num_actions_; }
  int NumContexts() const { return num_contexts_; }
  int NumObjectives() const { return num_objectives_; }

  const PayoffVector& At(int action, int context) const;
  // Q <- Q + alpha (p - Q). Throws DimensionError on a bad payoff length
  // and BoundsError on a bad index.
  void Update(int action, int context, std::span<const double> payoff,
              double alpha_q);
  // Q(., context) as one vector per action.
  ActionVectors Column(int context) const;

  const std::vector<PayoffVector>& entries() const { return entries_; }

  friend bool operator==(const QTable&, const QTable&) = default;

 private:
  int num_actions_ = 0;
  int num_contexts_ = 0;
  int num_objectives_ = 0;
  std::vector<PayoffVector> entries_;  // [action * contexts + context]
};

// Numerically stable softmax (subtracts max theta).
Strategy SoftmaxPolicy(std::span<const double> theta);

// q <- q + alpha_q (payoff - q), componentwise.
void QUpdate(PayoffVector& q, std::span<const double> payoff, double alpha_q);

// J = u(sum_a pi(a) Q(a)).
double Objective(const UtilityFunction& u, const Strategy& strategy,
                 const ActionVectors& q_slice);

// Exact gradient of J(theta) with pi = softmax(theta):
//   dJ/dtheta_k = pi_k (Q(k) - v) . grad u(v),  v = sum_a pi_a Q(a).
std::vector<double> GradTheta(const UtilityFunction& u,
                              std::span<const double> theta,
                              const ActionVectors& q_slice);

// theta <- theta + alpha_theta * grad.
void PolicyUpdate(Theta& theta, std::span<const double> grad,
                  double alpha_theta);

// sum_{a'} pi'(a') Q(a, a') for every own action a.
ActionVectors MarginalQ(const QTable& joint_q, const Strategy& opponent);

// GradTheta followed by PolicyUpdate.
void ActorCriticStep(Theta& theta, const UtilityFunction& u,
                     const ActionVectors& q_slice, double alpha_theta);

struct LearningRates {
  double q = 0.01;
  double theta = 0.01;
  friend bool operator==(const LearningRates&, const LearningRates&) = default;
};

// Independent learner: per-action Q(a), one policy.
struct IndependentAgent {
  IndependentAgent(int num_actions, int num_objectives, UtilityFunction u,
                   LearningRates rates);

  Theta theta;
  QTable q;
  UtilityFunction utility;
  LearningRates rates;
};

// Joint-action learner with a single stationary policy, used by
// cooperative action and cooperative policy communication. The opponent
// policy estimate starts uniform and is only read by policy communication.
struct JointActionAgent {
  JointActionAgent(int num_actions, int num_opponent_actions,
                   int num_objectives, UtilityFunction u, LearningRates rates);

  Theta theta;
  QTable q;  // Q(a, a')
  Strategy opponent_policy;
  UtilityFunction utility;
  LearningRates rates;
};

// Self-interested learner: a leader policy (observation None) and one
// follower policy per possible message, with Q(o, a) where the None slot is
// the last context column.
struct SelfInterestedAgent {
  SelfInterestedAgent(int num_actions, int num_opponent_actions,
                      int num_objectives, UtilityFunction u,
                      LearningRates leading, LearningRates following);

  int NoneObservation() const { return q.NumContexts() - 1; }

  Theta leader_theta;
  std::vector<Theta> follower_theta;  // indexed by observed message
  QTable q;
  UtilityFunction utility;
  LearningRates leading;
  LearningRates following;
};

enum class TopLevelChoice : int { kNoComm = 0, kComm = 1 };

// Two-level learner: a top-level policy over {no communication,
// communication} with protocol-level Q(p), plus two independent low-level
// learners.
struct HierarchicalAgent {
  using CommAgent = std::variant<JointActionAgent, SelfInterestedAgent>;

  HierarchicalAgent(int num_objectives, UtilityFunction u, LearningRates top,
                    IndependentAgent no_comm, CommAgent comm);

  Theta top_theta;
  QTable top_q;  // Q(p)
  UtilityFunction utility;
  LearningRates top_rates;
  IndependentAgent no_comm;
  CommAgent comm;
};

// FNV-1a over the bit patterns of every learned parameter.
uint64_t StateHash(const IndependentAgent& agent, uint64_t seed = 0);
uint64_t StateHash(const JointActionAgent& agent, uint64_t seed = 0);
uint64_t StateHash(const SelfInterestedAgent& agent, uint64_t seed = 0);
uint64_t StateHash(const HierarchicalAgent& agent, uint64_t seed = 0);

// Copies with every learning rate set to zero.
void ZeroRates(IndependentAgent& agent);
void ZeroRates(JointActionAgent& agent);
void ZeroRates(SelfInterestedAgent& agent);
void ZeroRates(HierarchicalAgent& agent);

}  // namespace monfg

#endif  // MONFG_AGENTS_H_
