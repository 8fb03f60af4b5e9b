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

#ifndef MONFG_UTILITY_H_
#define MONFG_UTILITY_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace monfg {

class Rng;

// A scalarisation u: R^d -> R with an analytic gradient.
//
//   linear          sum_o w_o p_o, w_o in [0, 1]
//   sum_of_squares  sum_o p_o^2        (u1 of the benchmark experiments)
//   product         prod_o p_o         (u2 of the benchmark experiments)
//   sum             sum_o p_o
//
// Product and sum-of-squares are monotone only on the nonnegative orthant;
// linear and sum are monotone everywhere.
class UtilityFunction {
 public:
  enum class Kind { kLinear, kSumOfSquares, kProduct, kSum };

  static UtilityFunction Linear(std::vector<double> weights);
  static UtilityFunction SumOfSquares() { return UtilityFunction(Kind::kSumOfSquares); }
  static UtilityFunction Product() { return UtilityFunction(Kind::kProduct); }
  static UtilityFunction Sum() { return UtilityFunction(Kind::kSum); }

  // "linear:0.5,0.5", "sos", "prod", "sum". Throws ConfigError.
  static UtilityFunction Parse(std::string_view spec);
  std::string ToSpec() const;

  Kind kind() const { return kind_; }
  const std::vector<double>& weights() const { return weights_; }

  // Both throw DimensionError when p does not fit (linear needs |p| = |w|).
  double Eval(std::span<const double> p) const;
  std::vector<double> Grad(std::span<const double> p) const;

  bool MonotoneOnNonnegativeOrthantOnly() const {
    return kind_ == Kind::kProduct || kind_ == Kind::kSumOfSquares;
  }

  friend bool operator==(const UtilityFunction&,
                         const UtilityFunction&) = default;

 private:
  explicit UtilityFunction(Kind kind) : kind_(kind) {}
  void CheckDimension(std::span<const double> p) const;

  Kind kind_;
  std::vector<double> weights_;
};

struct MonotonicityReport {
  int samples = 0;
  int violations = 0;
};

enum class SampleDomain { kNonnegativeOrthant, kAnywhere };

// Draws pairs p <= p' (componentwise) in the domain and counts cases with
// f(p') < f(p).
MonotonicityReport CheckMonotonicity(
    const std::function<double(std::span<const double>)>& f,
    int num_objectives, SampleDomain domain, int num_samples, Rng& rng);

// Uses the utility's own monotone domain.
MonotonicityReport CheckMonotonicity(const UtilityFunction& u,
                                     int num_objectives, int num_samples,
                                     Rng& rng);

}  // namespace monfg

#endif  // MONFG_UTILITY_H_
