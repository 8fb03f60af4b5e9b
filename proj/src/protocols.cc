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

#include "monfg/protocols.h"

#include "monfg/errors.h"

namespace monfg {
namespace {

JointAction OrderedActions(int leader, int leader_action, int follower_action) {
  return leader == 0 ? JointAction{leader_action, follower_action}
                     : JointAction{follower_action, leader_action};
}

void ObservePayoffs(const Game& game, EpisodeOutcome& outcome) {
  outcome.payoffs = game.Payoffs(outcome.actions);
}

int SampleAction(const Theta& theta, Rng& rng) {
  return rng.Categorical(SoftmaxPolicy(theta).probs());
}

std::vector<double> ProductDistribution(const Game& game, const Strategy& row,
                                        const Strategy& col) {
  std::vector<double> dist(game.NumProfiles());
  for (int a = 0; a < game.NumActions(0); ++a) {
    for (int b = 0; b < game.NumActions(1); ++b) {
      dist[a * game.NumActions(1) + b] = row[a] * col[b];
    }
  }
  return dist;
}

std::vector<double> SelfInterestedDistribution(
    const Game& game, const std::array<const SelfInterestedAgent*, 2>& agents,
    int leader) {
  const int follower = 1 - leader;
  const Strategy lead = SoftmaxPolicy(agents[leader]->leader_theta);
  std::vector<double> dist(game.NumProfiles(), 0.0);
  for (int m = 0; m < lead.NumActions(); ++m) {
    const Strategy response =
        SoftmaxPolicy(agents[follower]->follower_theta[m]);
    for (int b = 0; b < response.NumActions(); ++b) {
      dist[game.FlatIndex(OrderedActions(leader, m, b))] += lead[m] * response[b];
    }
  }
  return dist;
}

std::vector<double> CommDistribution(
    const Game& game, const HierarchicalAgent& first,
    const HierarchicalAgent& second, int leader) {
  if (std::holds_alternative<SelfInterestedAgent>(first.comm)) {
    return SelfInterestedDistribution(
        game,
        {&std::get<SelfInterestedAgent>(first.comm),
         &std::get<SelfInterestedAgent>(second.comm)},
        leader);
  }
  return ProductDistribution(
      game, SoftmaxPolicy(std::get<JointActionAgent>(first.comm).theta),
      SoftmaxPolicy(std::get<JointActionAgent>(second.comm).theta));
}

void CheckLeader(int leader) {
  if (leader != 0 && leader != 1) throw BoundsError("leader must be 0 or 1");
}

}  // namespace

int LeaderOf(int episode, int leader_offset) {
  return ((episode + leader_offset) % 2 + 2) % 2;
}

Role RoleOf(int agent, int episode, int leader_offset) {
  return LeaderOf(episode, leader_offset) == agent ? Role::kLeader
                                                   : Role::kFollower;
}

ProtocolSpec ProtocolSpec::Parse(const std::string& id) {
  auto parse_low = [](const std::string& name) {
    if (name == "coop_action") return ProtocolKind::kCoopAction;
    if (name == "self_action") return ProtocolKind::kSelfAction;
    if (name == "coop_policy") return ProtocolKind::kCoopPolicy;
    throw ConfigError("unknown low-level protocol '" + name +
                      "' (expected coop_action, self_action or coop_policy)");
  };
  if (id == "baseline") return {ProtocolKind::kBaseline};
  if (id.starts_with("hier:")) {
    return {ProtocolKind::kHierarchical, parse_low(id.substr(5))};
  }
  if (id == "coop_action" || id == "self_action" || id == "coop_policy") {
    return {parse_low(id)};
  }
  throw ConfigError("unknown protocol '" + id + "'");
}

std::string ProtocolSpec::ToString() const {
  auto name = [](ProtocolKind kind) -> std::string {
    switch (kind) {
      case ProtocolKind::kBaseline:
        return "baseline";
      case ProtocolKind::kCoopAction:
        return "coop_action";
      case ProtocolKind::kSelfAction:
        return "self_action";
      case ProtocolKind::kCoopPolicy:
        return "coop_policy";
      case ProtocolKind::kHierarchical:
        return "hier";
    }
    return "";
  };
  if (kind == ProtocolKind::kHierarchical) return "hier:" + name(low);
  return name(kind);
}

EpisodeOutcome RunEpisodeBaseline(IndependentAgent& first,
                                  IndependentAgent& second, const Game& game,
                                  RngPair rngs) {
  std::array<IndependentAgent*, 2> agents = {&first, &second};
  EpisodeOutcome outcome;
  outcome.message = NoMessage{};
  outcome.actions = {SampleAction(first.theta, *rngs[0]),
                     SampleAction(second.theta, *rngs[1])};
  ObservePayoffs(game, outcome);
  for (int i = 0; i < 2; ++i) {
    IndependentAgent& agent = *agents[i];
    agent.q.Update(outcome.actions[i], 0, outcome.payoffs[i], agent.rates.q);
    ActorCriticStep(agent.theta, agent.utility, agent.q.Column(0),
                    agent.rates.theta);
  }
  return outcome;
}

EpisodeOutcome RunEpisodeCoopAction(JointActionAgent& first,
                                    JointActionAgent& second, const Game& game,
                                    int leader, RngPair rngs) {
  CheckLeader(leader);
  std::array<JointActionAgent*, 2> agents = {&first, &second};
  const int follower = 1 - leader;
  JointActionAgent& lead = *agents[leader];
  JointActionAgent& follow = *agents[follower];

  const int commitment = SampleAction(lead.theta, *rngs[leader]);
  ActorCriticStep(follow.theta, follow.utility, follow.q.Column(commitment),
                  follow.rates.theta);
  const int response = SampleAction(follow.theta, *rngs[follower]);

  EpisodeOutcome outcome;
  outcome.leader = leader;
  outcome.message = CommitAction{commitment};
  outcome.actions = OrderedActions(leader, commitment, response);
  ObservePayoffs(game, outcome);
  for (int i = 0; i < 2; ++i) {
    JointActionAgent& agent = *agents[i];
    const int own = outcome.actions[i];
    const int other = outcome.actions[1 - i];
    agent.q.Update(own, other, outcome.payoffs[i], agent.rates.q);
    ActorCriticStep(agent.theta, agent.utility, agent.q.Column(other),
                    agent.rates.theta);
  }
  return outcome;
}

EpisodeOutcome RunEpisodeSelfInterested(SelfInterestedAgent& first,
                                        SelfInterestedAgent& second,
                                        const Game& game, int leader,
                                        RngPair rngs) {
  CheckLeader(leader);
  std::array<SelfInterestedAgent*, 2> agents = {&first, &second};
  const int follower = 1 - leader;
  SelfInterestedAgent& lead = *agents[leader];
  SelfInterestedAgent& follow = *agents[follower];

  const int commitment = SampleAction(lead.leader_theta, *rngs[leader]);
  const int response =
      SampleAction(follow.follower_theta.at(commitment), *rngs[follower]);

  EpisodeOutcome outcome;
  outcome.leader = leader;
  outcome.message = CommitAction{commitment};
  outcome.actions = OrderedActions(leader, commitment, response);
  ObservePayoffs(game, outcome);

  const int none = lead.NoneObservation();
  lead.q.Update(commitment, none, outcome.payoffs[leader], lead.leading.q);
  ActorCriticStep(lead.leader_theta, lead.utility, lead.q.Column(none),
                  lead.leading.theta);

  follow.q.Update(response, commitment, outcome.payoffs[follower],
                  follow.following.q);
  ActorCriticStep(follow.follower_theta[commitment], follow.utility,
                  follow.q.Column(commitment), follow.following.theta);
  return outcome;
}

EpisodeOutcome RunEpisodeCoopPolicy(JointActionAgent& first,
                                    JointActionAgent& second, const Game& game,
                                    int leader, RngPair rngs) {
  CheckLeader(leader);
  std::array<JointActionAgent*, 2> agents = {&first, &second};
  const int follower = 1 - leader;
  JointActionAgent& lead = *agents[leader];
  JointActionAgent& follow = *agents[follower];

  const Strategy message = SoftmaxPolicy(lead.theta);
  follow.opponent_policy = message;
  ActorCriticStep(follow.theta, follow.utility,
                  MarginalQ(follow.q, follow.opponent_policy),
                  follow.rates.theta);

  EpisodeOutcome outcome;
  outcome.leader = leader;
  outcome.message = CommitPolicy{message};
  outcome.actions = {SampleAction(first.theta, *rngs[0]),
                     SampleAction(second.theta, *rngs[1])};
  ObservePayoffs(game, outcome);
  for (int i = 0; i < 2; ++i) {
    JointActionAgent& agent = *agents[i];
    agent.q.Update(outcome.actions[i], outcome.actions[1 - i],
                   outcome.payoffs[i], agent.rates.q);
    ActorCriticStep(agent.theta, agent.utility,
                    MarginalQ(agent.q, agent.opponent_policy),
                    agent.rates.theta);
  }
  return outcome;
}

EpisodeOutcome RunEpisodeHierarchical(HierarchicalAgent& first,
                                      HierarchicalAgent& second,
                                      const Game& game, int leader,
                                      ProtocolKind low, RngPair rngs) {
  CheckLeader(leader);
  std::array<HierarchicalAgent*, 2> agents = {&first, &second};
  const bool self_interested_low = low == ProtocolKind::kSelfAction;
  if (low != ProtocolKind::kCoopAction && low != ProtocolKind::kCoopPolicy &&
      !self_interested_low) {
    throw ConfigError("hierarchical low level must be a communication "
                      "protocol");
  }
  for (const HierarchicalAgent* agent : agents) {
    if (std::holds_alternative<SelfInterestedAgent>(agent->comm) !=
        self_interested_low) {
      throw ConfigError("low-level protocol does not match the agents");
    }
  }

  const auto choice = static_cast<TopLevelChoice>(
      SampleAction(agents[leader]->top_theta, *rngs[leader]));
  EpisodeOutcome outcome;
  if (choice == TopLevelChoice::kNoComm) {
    outcome = RunEpisodeBaseline(first.no_comm, second.no_comm, game, rngs);
    outcome.leader = leader;
  } else if (low == ProtocolKind::kCoopAction) {
    outcome = RunEpisodeCoopAction(std::get<JointActionAgent>(first.comm),
                                   std::get<JointActionAgent>(second.comm),
                                   game, leader, rngs);
  } else if (low == ProtocolKind::kCoopPolicy) {
    outcome = RunEpisodeCoopPolicy(std::get<JointActionAgent>(first.comm),
                                   std::get<JointActionAgent>(second.comm),
                                   game, leader, rngs);
  } else {
    outcome = RunEpisodeSelfInterested(
        std::get<SelfInterestedAgent>(first.comm),
        std::get<SelfInterestedAgent>(second.comm), game, leader, rngs);
  }
  outcome.protocol = choice;

  const int used = static_cast<int>(choice);
  for (int i = 0; i < 2; ++i) {
    HierarchicalAgent& agent = *agents[i];
    agent.top_q.Update(used, 0, outcome.payoffs[i], agent.top_rates.q);
    ActorCriticStep(agent.top_theta, agent.utility, agent.top_q.Column(0),
                    agent.top_rates.theta);
  }
  return outcome;
}

LearnerPair LearnerPair::Create(const ProtocolSpec& spec, const Game& game,
                                const std::array<UtilityFunction, 2>& utilities,
                                const RateSchedule& rates) {
  RequireTwoPlayers(game);
  const int d = game.NumObjectives();
  auto actions = [&](int i) { return game.NumActions(i); };
  auto opponent_actions = [&](int i) { return game.NumActions(1 - i); };

  switch (spec.kind) {
    case ProtocolKind::kBaseline:
      return LearnerPair(
          spec, std::array<IndependentAgent, 2>{
                    IndependentAgent(actions(0), d, utilities[0], rates.base),
                    IndependentAgent(actions(1), d, utilities[1], rates.base)});
    case ProtocolKind::kCoopAction:
    case ProtocolKind::kCoopPolicy:
      return LearnerPair(
          spec, std::array<JointActionAgent, 2>{
                    JointActionAgent(actions(0), opponent_actions(0), d,
                                     utilities[0], rates.base),
                    JointActionAgent(actions(1), opponent_actions(1), d,
                                     utilities[1], rates.base)});
    case ProtocolKind::kSelfAction:
      return LearnerPair(
          spec, std::array<SelfInterestedAgent, 2>{
                    SelfInterestedAgent(actions(0), opponent_actions(0), d,
                                        utilities[0], rates.base,
                                        rates.follower),
                    SelfInterestedAgent(actions(1), opponent_actions(1), d,
                                        utilities[1], rates.base,
                                        rates.follower)});
    case ProtocolKind::kHierarchical: {
      auto make = [&](int i) {
        IndependentAgent no_comm(actions(i), d, utilities[i], rates.low);
        HierarchicalAgent::CommAgent comm =
            spec.low == ProtocolKind::kSelfAction
                ? HierarchicalAgent::CommAgent(SelfInterestedAgent(
                      actions(i), opponent_actions(i), d, utilities[i],
                      rates.low, rates.low))
                : HierarchicalAgent::CommAgent(JointActionAgent(
                      actions(i), opponent_actions(i), d, utilities[i],
                      rates.low));
        return HierarchicalAgent(d, utilities[i], rates.top,
                                 std::move(no_comm), std::move(comm));
      };
      if (spec.low == ProtocolKind::kBaseline ||
          spec.low == ProtocolKind::kHierarchical) {
        throw ConfigError("hierarchical low level must be a communication "
                          "protocol");
      }
      return LearnerPair(spec, std::array<HierarchicalAgent, 2>{make(0), make(1)});
    }
  }
  throw ConfigError("unknown protocol");
}

EpisodeOutcome LearnerPair::RunEpisode(const Game& game, int leader,
                                       RngPair rngs) {
  switch (spec_.kind) {
    case ProtocolKind::kBaseline: {
      auto& a = std::get<std::array<IndependentAgent, 2>>(agents_);
      EpisodeOutcome outcome = RunEpisodeBaseline(a[0], a[1], game, rngs);
      outcome.leader = leader;
      return outcome;
    }
    case ProtocolKind::kCoopAction: {
      auto& a = std::get<std::array<JointActionAgent, 2>>(agents_);
      return RunEpisodeCoopAction(a[0], a[1], game, leader, rngs);
    }
    case ProtocolKind::kCoopPolicy: {
      auto& a = std::get<std::array<JointActionAgent, 2>>(agents_);
      return RunEpisodeCoopPolicy(a[0], a[1], game, leader, rngs);
    }
    case ProtocolKind::kSelfAction: {
      auto& a = std::get<std::array<SelfInterestedAgent, 2>>(agents_);
      return RunEpisodeSelfInterested(a[0], a[1], game, leader, rngs);
    }
    case ProtocolKind::kHierarchical: {
      auto& a = std::get<std::array<HierarchicalAgent, 2>>(agents_);
      return RunEpisodeHierarchical(a[0], a[1], game, leader, spec_.low, rngs);
    }
  }
  throw ConfigError("unknown protocol");
}

LearnerPair LearnerPair::Frozen() const {
  LearnerPair copy = *this;
  std::visit(
      [](auto& pair) {
        for (auto& agent : pair) ZeroRates(agent);
      },
      copy.agents_);
  return copy;
}

uint64_t LearnerPair::StateHash() const {
  return std::visit(
      [](const auto& pair) {
        uint64_t h = 0;
        for (const auto& agent : pair) h = monfg::StateHash(agent, h);
        return h;
      },
      agents_);
}

std::vector<double> LearnerPair::PlayDistribution(const Game& game,
                                                  int leader) const {
  CheckLeader(leader);
  switch (spec_.kind) {
    case ProtocolKind::kBaseline: {
      const auto& a = std::get<std::array<IndependentAgent, 2>>(agents_);
      return ProductDistribution(game, SoftmaxPolicy(a[0].theta),
                                 SoftmaxPolicy(a[1].theta));
    }
    case ProtocolKind::kCoopAction:
    case ProtocolKind::kCoopPolicy: {
      const auto& a = std::get<std::array<JointActionAgent, 2>>(agents_);
      return ProductDistribution(game, SoftmaxPolicy(a[0].theta),
                                 SoftmaxPolicy(a[1].theta));
    }
    case ProtocolKind::kSelfAction: {
      const auto& a = std::get<std::array<SelfInterestedAgent, 2>>(agents_);
      return SelfInterestedDistribution(game, {&a[0], &a[1]}, leader);
    }
    case ProtocolKind::kHierarchical: {
      const auto& a = std::get<std::array<HierarchicalAgent, 2>>(agents_);
      const Strategy top = SoftmaxPolicy(a[leader].top_theta);
      const std::vector<double> silent = ProductDistribution(
          game, SoftmaxPolicy(a[0].no_comm.theta),
          SoftmaxPolicy(a[1].no_comm.theta));
      const std::vector<double> talking =
          CommDistribution(game, a[0], a[1], leader);
      std::vector<double> dist(game.NumProfiles());
      for (size_t k = 0; k < dist.size(); ++k) {
        dist[k] = top[0] * silent[k] + top[1] * talking[k];
      }
      return dist;
    }
  }
  throw ConfigError("unknown protocol");
}

std::optional<double> LearnerPair::CommProbability(int agent) const {
  if (spec_.kind != ProtocolKind::kHierarchical) return std::nullopt;
  const auto& a = std::get<std::array<HierarchicalAgent, 2>>(agents_);
  return SoftmaxPolicy(a.at(agent).top_theta)[1];
}

}  // namespace monfg
