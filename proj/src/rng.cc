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

#include "monfg/rng.h"

namespace monfg {
namespace {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

int Rng::Categorical(std::span<const double> probs) {
  double total = 0.0;
  for (double p : probs) total += p;
  const double target = Uniform() * total;
  double cumulative = 0.0;
  int last_positive = 0;
  for (int i = 0; i < static_cast<int>(probs.size()); ++i) {
    if (probs[i] <= 0.0) continue;
    cumulative += probs[i];
    last_positive = i;
    if (target < cumulative) return i;
  }
  // Rounding can leave target just above the final partial sum.
  return last_positive;
}

uint64_t StreamKey(uint64_t seed, uint64_t trial, uint64_t agent,
                   StreamPurpose purpose) {
  uint64_t key = SplitMix64(seed);
  key = SplitMix64(key ^ trial);
  key = SplitMix64(key ^ agent);
  key = SplitMix64(key ^ static_cast<uint64_t>(purpose));
  return key;
}

Rng RngStream(uint64_t seed, uint64_t trial, uint64_t agent,
              StreamPurpose purpose) {
  return Rng(StreamKey(seed, trial, agent, purpose));
}

}  // namespace monfg
