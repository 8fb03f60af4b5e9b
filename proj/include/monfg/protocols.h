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

#ifndef MONFG_PROTOCOLS_H_
#define MONFG_PROTOCOLS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "monfg/agents.h"
#include "monfg/game.h"
#include "monfg/rng.h"

namespace monfg {

enum class Role { kLeader, kFollower };

// Roles alternate every episode: leader(e) = (e + leader_offset) mod 2.
int LeaderOf(int episode, int leader_offset);
Role RoleOf(int agent, int episode, int leader_offset);

struct NoMessage {
  friend bool operator==(const NoMessage&, const NoMessage&) = default;
};
struct CommitAction {
  int action = 0;
  friend bool operator==(const CommitAction&, const CommitAction&) = default;
};
struct CommitPolicy {
  Strategy policy;
  friend bool operator==(const CommitPolicy&, const CommitPolicy&) = default;
};
using Message = std::variant<NoMessage, CommitAction, CommitPolicy>;

enum class ProtocolKind {
  kBaseline,
  kCoopAction,
  kSelfAction,
  kCoopPolicy,
  kHierarchical
};

// Identifiers: baseline, coop_action, self_action, coop_policy and
// hier:<low> with <low> one of the three communication protocols.
struct ProtocolSpec {
  ProtocolKind kind = ProtocolKind::kBaseline;
  ProtocolKind low = ProtocolKind::kCoopAction;  // kHierarchical only

  static ProtocolSpec Parse(const std::string& id);  // throws ConfigError
  std::string ToString() const;
  friend bool operator==(const ProtocolSpec&, const ProtocolSpec&) = default;
};

struct EpisodeOutcome {
  JointAction actions;
  std::vector<PayoffVector> payoffs;
  Message message;
  int leader = 0;
  // Hierarchical episodes: the protocol the leader picked.
  std::optional<TopLevelChoice> protocol;
};

using RngPair = std::array<Rng*, 2>;

// Independent actor-critic: both agents sample, observe their payoff,
// update Q(a), then ascend J. No messages.
EpisodeOutcome RunEpisodeBaseline(IndependentAgent& first,
                                  IndependentAgent& second, const Game& game,
                                  RngPair rngs);

// The leader samples and commits to an action; the follower ascends
// u(sum_a pi(a) Q(a, m)) before sampling its own action; both then update
// Q(a, a') and ascend J on the realised opponent column.
EpisodeOutcome RunEpisodeCoopAction(JointActionAgent& first,
                                    JointActionAgent& second, const Game& game,
                                    int leader, RngPair rngs);

// The leader samples from its leader policy and plays the committed action;
// the follower plays from the policy conditioned on the message. Each agent
// updates only Q(o, a) and the policy (role, o) it used, with role-specific
// learning rates.
EpisodeOutcome RunEpisodeSelfInterested(SelfInterestedAgent& first,
                                        SelfInterestedAgent& second,
                                        const Game& game, int leader,
                                        RngPair rngs);

// The leader's message is its full current policy. The follower stores it
// as the opponent policy estimate and ascends the marginalised objective
// before play; after play both update Q(a, a') and ascend the objective
// marginalised with their stored opponent policy.
EpisodeOutcome RunEpisodeCoopPolicy(JointActionAgent& first,
                                    JointActionAgent& second, const Game& game,
                                    int leader, RngPair rngs);

// The leader picks a low-level protocol with its top-level policy; both
// agents play that protocol (the no-communication branch uses the
// independent learners). Both then update Q(p) and the top-level policy and
// the low-level protocol that was used updates as part of its own episode.
// Throws ConfigError if `low` is not a communication protocol or does not
// match the agents' communication state.
EpisodeOutcome RunEpisodeHierarchical(HierarchicalAgent& first,
                                      HierarchicalAgent& second,
                                      const Game& game, int leader,
                                      ProtocolKind low, RngPair rngs);

// Learning-rate regime per role and level.
struct RateSchedule {
  LearningRates base{0.01, 0.01};      // forced communication and baseline
  LearningRates follower{0.05, 0.05};  // self_action when following
  LearningRates top{0.01, 0.01};       // hierarchical top level
  LearningRates low{0.05, 0.05};       // hierarchical low level, all roles
  friend bool operator==(const RateSchedule&, const RateSchedule&) = default;
};

// A matched pair of learners for one protocol.
class LearnerPair {
 public:
  using Agents = std::variant<std::array<IndependentAgent, 2>,
                              std::array<JointActionAgent, 2>,
                              std::array<SelfInterestedAgent, 2>,
                              std::array<HierarchicalAgent, 2>>;

  // Fresh agents: theta = 0, Q = 0. Throws ValidationError unless the game
  // has two players.
  static LearnerPair Create(const ProtocolSpec& spec, const Game& game,
                            const std::array<UtilityFunction, 2>& utilities,
                            const RateSchedule& rates);

  const ProtocolSpec& spec() const { return spec_; }
  const Agents& agents() const { return agents_; }
  Agents& agents() { return agents_; }

  EpisodeOutcome RunEpisode(const Game& game, int leader, RngPair rngs);

  // Copy whose episodes leave every parameter untouched.
  LearnerPair Frozen() const;

  uint64_t StateHash() const;

  // Distribution over flat joint profiles of one episode with this leader
  // when no learning takes place.
  std::vector<double> PlayDistribution(const Game& game, int leader) const;

  // Probability that the agent communicates when leading (hierarchical).
  std::optional<double> CommProbability(int agent) const;

 private:
  LearnerPair(ProtocolSpec spec, Agents agents)
      : spec_(spec), agents_(std::move(agents)) {}

  ProtocolSpec spec_;
  Agents agents_;
};

}  // namespace monfg

#endif  // MONFG_PROTOCOLS_H_
