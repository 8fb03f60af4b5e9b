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

#include "monfg/agents.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "monfg/errors.h"

namespace monfg {
namespace {

constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr uint64_t kFnvPrime = 0x100000001b3ULL;

uint64_t Mix(uint64_t hash, double value) {
  uint64_t bits = std::bit_cast<uint64_t>(value);
  for (int i = 0; i < 8; ++i) {
    hash ^= (bits >> (8 * i)) & 0xff;
    hash *= kFnvPrime;
  }
  return hash;
}

uint64_t Mix(uint64_t hash, std::span<const double> values) {
  for (double v : values) hash = Mix(hash, v);
  return hash;
}

uint64_t Mix(uint64_t hash, const QTable& q) {
  for (const PayoffVector& v : q.entries()) hash = Mix(hash, v);
  return hash;
}

void CheckSlice(std::span<const double> theta, const ActionVectors& q_slice) {
  if (theta.size() != q_slice.size()) {
    throw DimensionError("policy and Q slice disagree on the action count");
  }
  if (q_slice.empty()) throw DimensionError("empty Q slice");
}

PayoffVector ExpectedVector(const Strategy& strategy,
                            const ActionVectors& q_slice) {
  if (strategy.NumActions() != static_cast<int>(q_slice.size())) {
    throw DimensionError("strategy and Q slice disagree on the action count");
  }
  PayoffVector v(q_slice.front().size(), 0.0);
  for (size_t a = 0; a < q_slice.size(); ++a) {
    if (q_slice[a].size() != v.size()) {
      throw DimensionError("ragged Q slice");
    }
    for (size_t o = 0; o < v.size(); ++o) v[o] += strategy[a] * q_slice[a][o];
  }
  return v;
}

}  // namespace

QTable::QTable(int num_actions, int num_contexts, int num_objectives)
    : num_actions_(num_actions),
      num_contexts_(num_contexts),
      num_objectives_(num_objectives),
      entries_(static_cast<size_t>(num_actions) * num_contexts,
               PayoffVector(num_objectives, 0.0)) {
  if (num_actions < 1 || num_contexts < 1 || num_objectives < 1) {
    throw DimensionError("Q-table dimensions must be positive");
  }
}

const PayoffVector& QTable::At(int action, int context) const {
  if (action < 0 || action >= num_actions_ || context < 0 ||
      context >= num_contexts_) {
    throw BoundsError("Q-table index out of range");
  }
  return entries_[action * num_contexts_ + context];
}

void QTable::Update(int action, int context, std::span<const double> payoff,
                    double alpha_q) {
  if (action < 0 || action >= num_actions_ || context < 0 ||
      context >= num_contexts_) {
    throw BoundsError("Q-table index out of range");
  }
  QUpdate(entries_[action * num_contexts_ + context], payoff, alpha_q);
}

ActionVectors QTable::Column(int context) const {
  if (context < 0 || context >= num_contexts_) {
    throw BoundsError("Q-table context out of range");
  }
  ActionVectors out;
  out.reserve(num_actions_);
  for (int a = 0; a < num_actions_; ++a) {
    out.push_back(entries_[a * num_contexts_ + context]);
  }
  return out;
}

Strategy SoftmaxPolicy(std::span<const double> theta) {
  if (theta.empty()) throw DimensionError("softmax over zero actions");
  const double max_theta = *std::max_element(theta.begin(), theta.end());
  std::vector<double> probs(theta.size());
  double total = 0.0;
  for (size_t i = 0; i < theta.size(); ++i) {
    probs[i] = std::exp(theta[i] - max_theta);
    total += probs[i];
  }
  for (double& p : probs) p /= total;
  return Strategy(std::move(probs));
}

void QUpdate(PayoffVector& q, std::span<const double> payoff, double alpha_q) {
  if (q.size() != payoff.size()) {
    throw DimensionError("payoff length differs from Q entry length");
  }
  for (size_t o = 0; o < q.size(); ++o) q[o] += alpha_q * (payoff[o] - q[o]);
}

double Objective(const UtilityFunction& u, const Strategy& strategy,
                 const ActionVectors& q_slice) {
  return u.Eval(ExpectedVector(strategy, q_slice));
}

std::vector<double> GradTheta(const UtilityFunction& u,
                              std::span<const double> theta,
                              const ActionVectors& q_slice) {
  CheckSlice(theta, q_slice);
  const Strategy pi = SoftmaxPolicy(theta);
  const PayoffVector v = ExpectedVector(pi, q_slice);
  const std::vector<double> g = u.Grad(v);
  std::vector<double> grad(theta.size(), 0.0);
  for (size_t k = 0; k < theta.size(); ++k) {
    double dot = 0.0;
    for (size_t o = 0; o < v.size(); ++o) dot += (q_slice[k][o] - v[o]) * g[o];
    grad[k] = pi[k] * dot;
  }
  return grad;
}

void PolicyUpdate(Theta& theta, std::span<const double> grad,
                  double alpha_theta) {
  if (theta.size() != grad.size()) {
    throw DimensionError("gradient length differs from theta length");
  }
  for (size_t k = 0; k < theta.size(); ++k) theta[k] += alpha_theta * grad[k];
}

ActionVectors MarginalQ(const QTable& joint_q, const Strategy& opponent) {
  if (opponent.NumActions() != joint_q.NumContexts()) {
    throw DimensionError("opponent strategy does not match the Q-table");
  }
  ActionVectors out(joint_q.NumActions(),
                    PayoffVector(joint_q.NumObjectives(), 0.0));
  for (int a = 0; a < joint_q.NumActions(); ++a) {
    for (int b = 0; b < joint_q.NumContexts(); ++b) {
      const PayoffVector& entry = joint_q.At(a, b);
      for (int o = 0; o < joint_q.NumObjectives(); ++o) {
        out[a][o] += opponent[b] * entry[o];
      }
    }
  }
  return out;
}

void ActorCriticStep(Theta& theta, const UtilityFunction& u,
                     const ActionVectors& q_slice, double alpha_theta) {
  PolicyUpdate(theta, GradTheta(u, theta, q_slice), alpha_theta);
}

IndependentAgent::IndependentAgent(int num_actions, int num_objectives,
                                   UtilityFunction u, LearningRates rates)
    : theta(num_actions, 0.0),
      q(num_actions, 1, num_objectives),
      utility(std::move(u)),
      rates(rates) {}

JointActionAgent::JointActionAgent(int num_actions, int num_opponent_actions,
                                   int num_objectives, UtilityFunction u,
                                   LearningRates rates)
    : theta(num_actions, 0.0),
      q(num_actions, num_opponent_actions, num_objectives),
      opponent_policy(Strategy::Uniform(num_opponent_actions)),
      utility(std::move(u)),
      rates(rates) {}

SelfInterestedAgent::SelfInterestedAgent(int num_actions,
                                         int num_opponent_actions,
                                         int num_objectives, UtilityFunction u,
                                         LearningRates leading,
                                         LearningRates following)
    : leader_theta(num_actions, 0.0),
      follower_theta(num_opponent_actions, Theta(num_actions, 0.0)),
      q(num_actions, num_opponent_actions + 1, num_objectives),
      utility(std::move(u)),
      leading(leading),
      following(following) {}

HierarchicalAgent::HierarchicalAgent(int num_objectives, UtilityFunction u,
                                     LearningRates top,
                                     IndependentAgent no_comm_agent,
                                     CommAgent comm_agent)
    : top_theta(2, 0.0),
      top_q(2, 1, num_objectives),
      utility(std::move(u)),
      top_rates(top),
      no_comm(std::move(no_comm_agent)),
      comm(std::move(comm_agent)) {}

uint64_t StateHash(const IndependentAgent& agent, uint64_t seed) {
  uint64_t h = kFnvOffset ^ seed;
  h = Mix(h, agent.theta);
  return Mix(h, agent.q);
}

uint64_t StateHash(const JointActionAgent& agent, uint64_t seed) {
  uint64_t h = kFnvOffset ^ seed;
  h = Mix(h, agent.theta);
  h = Mix(h, agent.q);
  return Mix(h, agent.opponent_policy.probs());
}

uint64_t StateHash(const SelfInterestedAgent& agent, uint64_t seed) {
  uint64_t h = kFnvOffset ^ seed;
  h = Mix(h, agent.leader_theta);
  for (const Theta& theta : agent.follower_theta) h = Mix(h, theta);
  return Mix(h, agent.q);
}

uint64_t StateHash(const HierarchicalAgent& agent, uint64_t seed) {
  uint64_t h = kFnvOffset ^ seed;
  h = Mix(h, agent.top_theta);
  h = Mix(h, agent.top_q);
  h = StateHash(agent.no_comm, h);
  return std::visit([h](const auto& comm) { return StateHash(comm, h); },
                    agent.comm);
}

void ZeroRates(IndependentAgent& agent) { agent.rates = {0.0, 0.0}; }
void ZeroRates(JointActionAgent& agent) { agent.rates = {0.0, 0.0}; }
void ZeroRates(SelfInterestedAgent& agent) {
  agent.leading = {0.0, 0.0};
  agent.following = {0.0, 0.0};
}
void ZeroRates(HierarchicalAgent& agent) {
  agent.top_rates = {0.0, 0.0};
  ZeroRates(agent.no_comm);
  std::visit([](auto& comm) { ZeroRates(comm); }, agent.comm);
}

}  // namespace monfg
