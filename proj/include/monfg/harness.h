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

#ifndef MONFG_HARNESS_H_
#define MONFG_HARNESS_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "monfg/game.h"
#include "monfg/protocols.h"
#include "monfg/rng.h"
#include "monfg/utility.h"

namespace monfg {

struct ExperimentConfig {
  std::string game = "1";
  std::string protocol = "baseline";
  int episodes = 5000;
  int trials = 100;
  int rollouts = 100;
  RateSchedule rates;
  std::array<std::string, 2> utilities = {"sos", "prod"};
  uint64_t seed = 0;
  int measurement_interval = 1;
  double last_fraction = 0.1;
  int leader_offset = 0;
  // 0 selects the machine's hardware concurrency.
  int threads = 0;

  // Throws ConfigError on a violated invariant or an unknown protocol or
  // utility. Does not resolve the game.
  void Validate() const;
  friend bool operator==(const ExperimentConfig&,
                         const ExperimentConfig&) = default;
};

// JSON mirror of ExperimentConfig using the same field names.
std::string ConfigToJson(const ExperimentConfig& config);
// Fields missing from `json` keep the values already in `base`. Throws
// ConfigError on malformed JSON, unknown keys or mistyped values.
ExperimentConfig ConfigFromJson(const std::string& json,
                                ExperimentConfig base = {});

struct MetricsRow {
  int trial = 0;
  int episode = 0;
  int agent = 0;
  double ser_mc = 0.0;
  double ser_exact = 0.0;
  std::optional<double> comm_prob;
  std::vector<double> action_probs;
  friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

struct Measurement {
  std::array<double, 2> ser_mc{};
  std::array<std::vector<double>, 2> action_probs;
  std::array<std::optional<double>, 2> comm_prob;
};

// Replays one episode with `leader` `rollouts` times on a frozen copy of
// `learners`, drawing from the measurement streams. ser_mc is u(mean
// payoff); action and communication probabilities are empirical
// frequencies. `learners` is left untouched.
Measurement MonteCarloMeasure(const LearnerPair& learners, const Game& game,
                              int leader, int rollouts,
                              const std::array<UtilityFunction, 2>& utilities,
                              std::array<Rng, 2>& measurement_rngs);

// Joint-action counts over flat profiles.
struct JointActionHistogram {
  std::vector<int64_t> counts;

  int64_t Total() const;
  std::vector<double> Frequencies() const;
  void Add(const JointActionHistogram& other);
};

// ceil(last_fraction * episodes), at least 1.
int HistogramWindow(int episodes, double last_fraction);

struct TrialResult {
  int trial = 0;
  std::vector<MetricsRow> rows;  // ordered by (episode, agent)
  JointActionHistogram histogram;  // last-fraction window
  uint64_t final_state_hash = 0;
  // Exact SER entering every episode, per agent, also on episodes that are
  // not measured.
  std::array<std::vector<double>, 2> ser_exact_trace;
};

TrialResult RunTrial(const ExperimentConfig& config, const Game& game,
                     int trial);

struct SummaryRow {
  int episode = 0;
  int agent = 0;
  double ser_mc_mean = 0.0;
  double ser_mc_std = 0.0;
  double ser_exact_mean = 0.0;
  double ser_exact_std = 0.0;
  std::optional<double> comm_prob_mean;
  std::optional<double> comm_prob_std;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<TrialResult> trials;  // ordered by trial index
  JointActionHistogram histogram;
  std::vector<SummaryRow> summary;  // ordered by (episode, agent)
};

// Population mean and standard deviation per (episode, agent).
std::vector<SummaryRow> Summarise(const std::vector<TrialResult>& trials);

// Runs all trials, concurrently up to config.threads.
ExperimentResult RunExperiment(const ExperimentConfig& config);
ExperimentResult RunExperiment(const ExperimentConfig& config,
                               const Game& game);

// Writes metrics.csv, joint_hist.csv, summary.csv and config.json into
// `dir`, creating it if needed. Throws Error when a file cannot be written.
void WriteOutputs(const ExperimentResult& result, const Game& game,
                  const std::filesystem::path& dir);

std::string MetricsCsv(const ExperimentResult& result, const Game& game);
std::string JointHistogramCsv(const ExperimentResult& result,
                              const Game& game);
std::string SummaryCsv(const ExperimentResult& result);

}  // namespace monfg

#endif  // MONFG_HARNESS_H_
