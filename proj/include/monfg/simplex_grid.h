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

#ifndef MONFG_SIMPLEX_GRID_H_
#define MONFG_SIMPLEX_GRID_H_

#include <cstdint>
#include <functional>
#include <vector>

namespace monfg {

// All strategies over m actions whose coordinates are multiples of 1/G.
//
// Points are enumerated in a fixed canonical order: the first coordinate
// runs from G/G down to 0, and the remaining coordinates recursively in the
// same order. Point 0 is therefore the pure strategy on action 0, and "lowest
// index" tie-breaking favours mass on low action indices.
class SimplexGrid {
 public:
  explicit SimplexGrid(int resolution);

  // G = 100 for up to two actions, 50 for three, 20 beyond.
  static SimplexGrid DefaultFor(int num_actions);

  int resolution() const { return resolution_; }
  double step() const { return 1.0 / resolution_; }

  // C(G + m - 1, m - 1).
  static uint64_t Size(int resolution, int num_actions);
  uint64_t Size(int num_actions) const { return Size(resolution_, num_actions); }

  std::vector<std::vector<double>> Points(int num_actions) const;

 private:
  int resolution_;
};

// Coordinate-wise local search over a product of simplices: repeatedly moves
// `step` of probability mass between two actions of one simplex while the
// objective improves, halving the step down to min_step. Returns the final
// objective value; `point` is updated in place.
double RefineOnSimplices(
    const std::function<double(const std::vector<std::vector<double>>&)>&
        objective,
    std::vector<std::vector<double>>& point, double initial_step,
    double min_step = 1e-6);

}  // namespace monfg

#endif  // MONFG_SIMPLEX_GRID_H_
