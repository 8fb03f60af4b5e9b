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

#ifndef MONFG_RNG_H_
#define MONFG_RNG_H_

#include <cstdint>
#include <random>
#include <span>

namespace monfg {

// Thin wrapper over std::mt19937_64. Only the engine's raw output is used
// (the standard fixes it bit-for-bit); uniform and categorical draws are
// derived here so results do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }
  // Samples an index with probability proportional to probs[i].
  int Categorical(std::span<const double> probs);

  friend bool operator==(const Rng&, const Rng&) = default;

 private:
  std::mt19937_64 engine_;
};

enum class StreamPurpose : uint64_t { kAction = 1, kMeasurement = 2 };

// Key derivation: the tuple (seed, trial, agent, purpose) is folded through
// SplitMix64 one field at a time; the final 64-bit value seeds the engine.
// Distinct tuples give unrelated streams; the same tuple always gives the
// same stream.
uint64_t StreamKey(uint64_t seed, uint64_t trial, uint64_t agent,
                   StreamPurpose purpose);
Rng RngStream(uint64_t seed, uint64_t trial, uint64_t agent,
              StreamPurpose purpose);

}  // namespace monfg

#endif  // MONFG_RNG_H_
