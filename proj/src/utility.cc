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

#include "monfg/utility.h"

#include <charconv>
#include <sstream>

#include "monfg/errors.h"
#include "monfg/game_io.h"
#include "monfg/rng.h"

namespace monfg {

UtilityFunction UtilityFunction::Linear(std::vector<double> weights) {
  if (weights.empty()) throw ConfigError("linear utility needs weights");
  for (double w : weights) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw ConfigError("linear utility weights must lie in [0, 1]");
    }
  }
  UtilityFunction u(Kind::kLinear);
  u.weights_ = std::move(weights);
  return u;
}

UtilityFunction UtilityFunction::Parse(std::string_view spec) {
  if (spec == "sos" || spec == "sum_of_squares") return SumOfSquares();
  if (spec == "prod" || spec == "product") return Product();
  if (spec == "sum") return Sum();
  if (spec.starts_with("linear:")) {
    std::string_view rest = spec.substr(7);
    std::vector<double> weights;
    while (!rest.empty()) {
      const size_t comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      double w = 0.0;
      auto [ptr, ec] =
          std::from_chars(item.data(), item.data() + item.size(), w);
      if (ec != std::errc() || ptr != item.data() + item.size()) {
        throw ConfigError("bad linear weight '" + std::string(item) + "'");
      }
      weights.push_back(w);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return Linear(std::move(weights));
  }
  throw ConfigError("unknown utility '" + std::string(spec) +
                    "' (expected linear:w1,w2,..., sos, prod or sum)");
}

std::string UtilityFunction::ToSpec() const {
  switch (kind_) {
    case Kind::kSumOfSquares:
      return "sos";
    case Kind::kProduct:
      return "prod";
    case Kind::kSum:
      return "sum";
    case Kind::kLinear: {
      std::string out = "linear:";
      for (size_t i = 0; i < weights_.size(); ++i) {
        if (i) out += ",";
        out += FormatDouble(weights_[i]);
      }
      return out;
    }
  }
  return "";
}

void UtilityFunction::CheckDimension(std::span<const double> p) const {
  if (p.empty()) throw DimensionError("utility applied to an empty vector");
  if (kind_ == Kind::kLinear && p.size() != weights_.size()) {
    throw DimensionError("linear utility has " +
                         std::to_string(weights_.size()) +
                         " weights but the vector has length " +
                         std::to_string(p.size()));
  }
}

double UtilityFunction::Eval(std::span<const double> p) const {
  CheckDimension(p);
  double acc = kind_ == Kind::kProduct ? 1.0 : 0.0;
  for (size_t o = 0; o < p.size(); ++o) {
    switch (kind_) {
      case Kind::kLinear:
        acc += weights_[o] * p[o];
        break;
      case Kind::kSumOfSquares:
        acc += p[o] * p[o];
        break;
      case Kind::kProduct:
        acc *= p[o];
        break;
      case Kind::kSum:
        acc += p[o];
        break;
    }
  }
  return acc;
}

std::vector<double> UtilityFunction::Grad(std::span<const double> p) const {
  CheckDimension(p);
  std::vector<double> g(p.size());
  for (size_t o = 0; o < p.size(); ++o) {
    switch (kind_) {
      case Kind::kLinear:
        g[o] = weights_[o];
        break;
      case Kind::kSumOfSquares:
        g[o] = 2.0 * p[o];
        break;
      case Kind::kProduct: {
        // Product of the other coordinates; avoids dividing by zero.
        double rest = 1.0;
        for (size_t j = 0; j < p.size(); ++j) {
          if (j != o) rest *= p[j];
        }
        g[o] = rest;
        break;
      }
      case Kind::kSum:
        g[o] = 1.0;
        break;
    }
  }
  return g;
}

MonotonicityReport CheckMonotonicity(
    const std::function<double(std::span<const double>)>& f,
    int num_objectives, SampleDomain domain, int num_samples, Rng& rng) {
  if (num_samples <= 0) throw ConfigError("num_samples must be positive");
  MonotonicityReport report;
  std::vector<double> p(num_objectives), q(num_objectives);
  for (int s = 0; s < num_samples; ++s) {
    for (int o = 0; o < num_objectives; ++o) {
      p[o] = domain == SampleDomain::kNonnegativeOrthant
                 ? 10.0 * rng.Uniform()
                 : 20.0 * rng.Uniform() - 10.0;
      // A quarter of the coordinates stay fixed to probe weak dominance.
      const double delta = rng.Uniform() < 0.25 ? 0.0 : 5.0 * rng.Uniform();
      q[o] = p[o] + delta;
    }
    ++report.samples;
    if (f(q) < f(p)) ++report.violations;
  }
  return report;
}

MonotonicityReport CheckMonotonicity(const UtilityFunction& u,
                                     int num_objectives, int num_samples,
                                     Rng& rng) {
  const SampleDomain domain = u.MonotoneOnNonnegativeOrthantOnly()
                                  ? SampleDomain::kNonnegativeOrthant
                                  : SampleDomain::kAnywhere;
  return CheckMonotonicity(
      [&u](std::span<const double> p) { return u.Eval(p); }, num_objectives,
      domain, num_samples, rng);
}

}  // namespace monfg
