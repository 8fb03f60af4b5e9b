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

#include "monfg/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "monfg/catalog.h"
#include "monfg/errors.h"
#include "monfg/evaluation.h"
#include "monfg/game_io.h"

namespace monfg {
namespace {

using nlohmann::json;

std::array<UtilityFunction, 2> ParseUtilities(const ExperimentConfig& config) {
  return {UtilityFunction::Parse(config.utilities[0]),
          UtilityFunction::Parse(config.utilities[1])};
}

void CheckRate(double rate, const std::string& name) {
  if (!(rate > 0.0 && rate <= 1.0)) {
    throw ConfigError(name + " must lie in (0, 1]");
  }
}

void CheckRates(const LearningRates& rates, const std::string& name) {
  CheckRate(rates.q, name + "_q");
  CheckRate(rates.theta, name + "_theta");
}

// Exact SER of both agents for a distribution over flat profiles.
std::array<double, 2> ExactSer(const Game& game,
                               const std::vector<double>& distribution,
                               const std::array<UtilityFunction, 2>& u) {
  const std::vector<PayoffVector> expected =
      ExpectedPayoffUnder(game, distribution);
  return {u[0].Eval(expected[0]), u[1].Eval(expected[1])};
}

std::string Cell(double value) { return FormatDouble(value); }

std::string Cell(const std::optional<double>& value) {
  return value ? FormatDouble(*value) : std::string();
}

int ProbabilityColumns(const Game& game) {
  return std::max({3, game.NumActions(0), game.NumActions(1)});
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  out.close();
  if (!out) throw Error("failed writing " + path.string());
}

template <typename T>
void ReadField(const json& object, const char* key, T& target) {
  if (!object.contains(key)) return;
  try {
    target = object.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field '") + key +
                      "' has the wrong type");
  }
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (episodes < 1) throw ConfigError("episodes must be >= 1");
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (rollouts < 1) throw ConfigError("rollouts must be >= 1");
  if (measurement_interval < 1) {
    throw ConfigError("measurement_interval must be >= 1");
  }
  if (!(last_fraction > 0.0 && last_fraction <= 1.0)) {
    throw ConfigError("last_fraction must lie in (0, 1]");
  }
  if (threads < 0) throw ConfigError("threads must be >= 0");
  CheckRates(rates.base, "alpha");
  CheckRates(rates.follower, "alpha_follower");
  CheckRates(rates.top, "alpha_top");
  CheckRates(rates.low, "alpha_low");
  ProtocolSpec::Parse(protocol);
  ParseUtilities(*this);
}

std::string ConfigToJson(const ExperimentConfig& config) {
  json j = json::object();
  j["game"] = config.game;
  j["protocol"] = config.protocol;
  j["episodes"] = config.episodes;
  j["trials"] = config.trials;
  j["rollouts"] = config.rollouts;
  j["alpha_q"] = config.rates.base.q;
  j["alpha_theta"] = config.rates.base.theta;
  j["alpha_follower_q"] = config.rates.follower.q;
  j["alpha_follower_theta"] = config.rates.follower.theta;
  j["alpha_top_q"] = config.rates.top.q;
  j["alpha_top_theta"] = config.rates.top.theta;
  j["alpha_low_q"] = config.rates.low.q;
  j["alpha_low_theta"] = config.rates.low.theta;
  j["utilities"] = config.utilities;
  j["seed"] = config.seed;
  j["measurement_interval"] = config.measurement_interval;
  j["last_fraction"] = config.last_fraction;
  j["leader_offset"] = config.leader_offset;
  j["threads"] = config.threads;
  return j.dump(2) + "\n";
}

ExperimentConfig ConfigFromJson(const std::string& text,
                                ExperimentConfig base) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed config JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config JSON must be an object");
  static const std::vector<std::string> kKeys = {
      "game", "protocol", "episodes", "trials", "rollouts", "alpha_q",
      "alpha_theta", "alpha_follower_q", "alpha_follower_theta",
      "alpha_top_q", "alpha_top_theta", "alpha_low_q", "alpha_low_theta",
      "utilities", "seed", "measurement_interval", "last_fraction",
      "leader_offset", "threads"};
  for (const auto& item : j.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), item.key()) == kKeys.end()) {
      throw ConfigError("unknown config field '" + item.key() + "'");
    }
  }
  if (j.contains("game") && j["game"].is_number_integer()) {
    j["game"] = std::to_string(j["game"].get<int>());
  }
  ReadField(j, "game", base.game);
  ReadField(j, "protocol", base.protocol);
  ReadField(j, "episodes", base.episodes);
  ReadField(j, "trials", base.trials);
  ReadField(j, "rollouts", base.rollouts);
  ReadField(j, "alpha_q", base.rates.base.q);
  ReadField(j, "alpha_theta", base.rates.base.theta);
  ReadField(j, "alpha_follower_q", base.rates.follower.q);
  ReadField(j, "alpha_follower_theta", base.rates.follower.theta);
  ReadField(j, "alpha_top_q", base.rates.top.q);
  ReadField(j, "alpha_top_theta", base.rates.top.theta);
  ReadField(j, "alpha_low_q", base.rates.low.q);
  ReadField(j, "alpha_low_theta", base.rates.low.theta);
  ReadField(j, "utilities", base.utilities);
  ReadField(j, "seed", base.seed);
  ReadField(j, "measurement_interval", base.measurement_interval);
  ReadField(j, "last_fraction", base.last_fraction);
  ReadField(j, "leader_offset", base.leader_offset);
  ReadField(j, "threads", base.threads);
  return base;
}

Measurement MonteCarloMeasure(const LearnerPair& learners, const Game& game,
                              int leader, int rollouts,
                              const std::array<UtilityFunction, 2>& utilities,
                              std::array<Rng, 2>& measurement_rngs) {
  if (rollouts < 1) throw ConfigError("rollouts must be >= 1");
  LearnerPair frozen = learners.Frozen();
  const bool hierarchical =
      learners.spec().kind == ProtocolKind::kHierarchical;
  const int d = game.NumObjectives();
  const int follower = 1 - leader;

  std::array<PayoffVector, 2> payoff_sum = {PayoffVector(d, 0.0),
                                            PayoffVector(d, 0.0)};
  std::array<std::vector<double>, 2> action_counts = {
      std::vector<double>(game.NumActions(0), 0.0),
      std::vector<double>(game.NumActions(1), 0.0)};
  std::array<double, 2> comm_counts = {0.0, 0.0};
  const RngPair rngs = {&measurement_rngs[0], &measurement_rngs[1]};

  for (int r = 0; r < rollouts; ++r) {
    const EpisodeOutcome outcome = frozen.RunEpisode(game, leader, rngs);
    for (int i = 0; i < 2; ++i) {
      for (int o = 0; o < d; ++o) payoff_sum[i][o] += outcome.payoffs[i][o];
      action_counts[i][outcome.actions[i]] += 1.0;
    }
    if (hierarchical) {
      if (outcome.protocol == TopLevelChoice::kComm) comm_counts[leader] += 1;
      const auto& agents =
          std::get<std::array<HierarchicalAgent, 2>>(frozen.agents());
      const int choice = measurement_rngs[follower].Categorical(
          SoftmaxPolicy(agents[follower].top_theta).probs());
      if (choice == static_cast<int>(TopLevelChoice::kComm)) {
        comm_counts[follower] += 1;
      }
    }
  }

  Measurement m;
  for (int i = 0; i < 2; ++i) {
    for (double& v : payoff_sum[i]) v /= rollouts;
    for (double& c : action_counts[i]) c /= rollouts;
    m.ser_mc[i] = utilities[i].Eval(payoff_sum[i]);
    m.action_probs[i] = std::move(action_counts[i]);
    if (hierarchical) m.comm_prob[i] = comm_counts[i] / rollouts;
  }
  return m;
}

int64_t JointActionHistogram::Total() const {
  int64_t total = 0;
  for (int64_t c : counts) total += c;
  return total;
}

std::vector<double> JointActionHistogram::Frequencies() const {
  const int64_t total = Total();
  std::vector<double> freq(counts.size(), 0.0);
  if (total == 0) return freq;
  for (size_t k = 0; k < counts.size(); ++k) {
    freq[k] = static_cast<double>(counts[k]) / static_cast<double>(total);
  }
  return freq;
}

void JointActionHistogram::Add(const JointActionHistogram& other) {
  if (counts.empty()) counts.assign(other.counts.size(), 0);
  if (counts.size() != other.counts.size()) {
    throw DimensionError("histogram sizes differ");
  }
  for (size_t k = 0; k < counts.size(); ++k) counts[k] += other.counts[k];
}

int HistogramWindow(int episodes, double last_fraction) {
  const int window = static_cast<int>(
      std::ceil(last_fraction * static_cast<double>(episodes) - 1e-9));
  return std::clamp(window, 1, std::max(episodes, 1));
}

TrialResult RunTrial(const ExperimentConfig& config, const Game& game,
                     int trial) {
  config.Validate();
  RequireTwoPlayers(game);
  const std::array<UtilityFunction, 2> utilities = ParseUtilities(config);
  LearnerPair learners = LearnerPair::Create(
      ProtocolSpec::Parse(config.protocol), game, utilities, config.rates);

  const uint64_t t = static_cast<uint64_t>(trial);
  std::array<Rng, 2> action = {
      RngStream(config.seed, t, 0, StreamPurpose::kAction),
      RngStream(config.seed, t, 1, StreamPurpose::kAction)};
  std::array<Rng, 2> measurement = {
      RngStream(config.seed, t, 0, StreamPurpose::kMeasurement),
      RngStream(config.seed, t, 1, StreamPurpose::kMeasurement)};
  const RngPair action_rngs = {&action[0], &action[1]};

  TrialResult result;
  result.trial = trial;
  result.histogram.counts.assign(game.NumProfiles(), 0);
  const int window_start =
      config.episodes - HistogramWindow(config.episodes, config.last_fraction);
  for (auto& trace : result.ser_exact_trace) trace.reserve(config.episodes);

  for (int e = 0; e < config.episodes; ++e) {
    const int leader = LeaderOf(e, config.leader_offset);
    const std::array<double, 2> exact =
        ExactSer(game, learners.PlayDistribution(game, leader), utilities);
    result.ser_exact_trace[0].push_back(exact[0]);
    result.ser_exact_trace[1].push_back(exact[1]);

    if (e % config.measurement_interval == 0) {
      Measurement m = MonteCarloMeasure(learners, game, leader,
                                        config.rollouts, utilities,
                                        measurement);
      for (int i = 0; i < 2; ++i) {
        MetricsRow row;
        row.trial = trial;
        row.episode = e;
        row.agent = i;
        row.ser_mc = m.ser_mc[i];
        row.ser_exact = exact[i];
        row.comm_prob = m.comm_prob[i];
        row.action_probs = std::move(m.action_probs[i]);
        result.rows.push_back(std::move(row));
      }
    }

    const EpisodeOutcome outcome =
        learners.RunEpisode(game, leader, action_rngs);
    if (e >= window_start) {
      ++result.histogram.counts[game.FlatIndex(outcome.actions)];
    }
  }
  result.final_state_hash = learners.StateHash();
  return result;
}

std::vector<SummaryRow> Summarise(const std::vector<TrialResult>& trials) {
  std::vector<SummaryRow> summary;
  if (trials.empty()) return summary;
  const size_t n_rows = trials.front().rows.size();
  for (const TrialResult& t : trials) {
    if (t.rows.size() != n_rows) {
      throw DimensionError("trials have different measurement counts");
    }
  }
  const double n = static_cast<double>(trials.size());
  auto mean_std = [n](const std::vector<double>& xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= n;
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    return std::pair<double, double>(mean, std::sqrt(var / n));
  };
  summary.reserve(n_rows);
  std::vector<double> mc(trials.size()), ex(trials.size()),
      comm(trials.size());
  for (size_t r = 0; r < n_rows; ++r) {
    bool has_comm = true;
    for (size_t k = 0; k < trials.size(); ++k) {
      const MetricsRow& row = trials[k].rows[r];
      mc[k] = row.ser_mc;
      ex[k] = row.ser_exact;
      has_comm = has_comm && row.comm_prob.has_value();
      comm[k] = row.comm_prob.value_or(0.0);
    }
    SummaryRow s;
    s.episode = trials.front().rows[r].episode;
    s.agent = trials.front().rows[r].agent;
    std::tie(s.ser_mc_mean, s.ser_mc_std) = mean_std(mc);
    std::tie(s.ser_exact_mean, s.ser_exact_std) = mean_std(ex);
    if (has_comm) {
      const auto [m, sd] = mean_std(comm);
      s.comm_prob_mean = m;
      s.comm_prob_std = sd;
    }
    summary.push_back(s);
  }
  return summary;
}

ExperimentResult RunExperiment(const ExperimentConfig& config) {
  config.Validate();
  return RunExperiment(config, ResolveGame(config.game));
}

ExperimentResult RunExperiment(const ExperimentConfig& config,
                               const Game& game) {
  config.Validate();
  RequireTwoPlayers(game);
  ExperimentResult result;
  result.config = config;
  result.trials.resize(config.trials);

  int workers = config.threads > 0
                    ? config.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, config.trials);

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&]() {
    for (int t = next++; t < config.trials; t = next++) {
      try {
        result.trials[t] = RunTrial(config, game, t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = config.trials;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  result.histogram.counts.assign(game.NumProfiles(), 0);
  for (const TrialResult& t : result.trials) result.histogram.Add(t.histogram);
  result.summary = Summarise(result.trials);
  return result;
}

std::string MetricsCsv(const ExperimentResult& result, const Game& game) {
  std::ostringstream out;
  const int columns = ProbabilityColumns(game);
  out << "trial,episode,agent,ser_mc,ser_exact,comm_prob";
  for (int a = 0; a < columns; ++a) out << ",prob_a" << a;
  out << '\n';
  for (const TrialResult& t : result.trials) {
    for (const MetricsRow& row : t.rows) {
      out << row.trial << ',' << row.episode << ',' << row.agent << ','
          << Cell(row.ser_mc) << ',' << Cell(row.ser_exact) << ','
          << Cell(row.comm_prob);
      for (int a = 0; a < columns; ++a) {
        out << ',';
        if (a < static_cast<int>(row.action_probs.size())) {
          out << Cell(row.action_probs[a]);
        }
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string JointHistogramCsv(const ExperimentResult& result,
                              const Game& game) {
  std::ostringstream out;
  out << "row_action,col_action,frequency\n";
  const std::vector<double> freq = result.histogram.Frequencies();
  for (int k = 0; k < game.NumProfiles(); ++k) {
    const JointAction profile = game.ProfileAt(k);
    out << game.ActionLabel(0, profile[0]) << ','
        << game.ActionLabel(1, profile[1]) << ',' << Cell(freq[k]) << '\n';
  }
  return out.str();
}

std::string SummaryCsv(const ExperimentResult& result) {
  std::ostringstream out;
  out << "episode,agent,ser_mc_mean,ser_mc_std,ser_exact_mean,"
         "ser_exact_std,comm_prob_mean,comm_prob_std\n";
  for (const SummaryRow& s : result.summary) {
    out << s.episode << ',' << s.agent << ',' << Cell(s.ser_mc_mean) << ','
        << Cell(s.ser_mc_std) << ',' << Cell(s.ser_exact_mean) << ','
        << Cell(s.ser_exact_std) << ',' << Cell(s.comm_prob_mean) << ','
        << Cell(s.comm_prob_std) << '\n';
  }
  return out.str();
}

void WriteOutputs(const ExperimentResult& result, const Game& game,
                  const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());
  WriteFile(dir / "metrics.csv", MetricsCsv(result, game));
  WriteFile(dir / "joint_hist.csv", JointHistogramCsv(result, game));
  WriteFile(dir / "summary.csv", SummaryCsv(result));
  WriteFile(dir / "config.json", ConfigToJson(result.config));
}

}  // namespace monfg
