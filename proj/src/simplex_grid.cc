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

#include "monfg/simplex_grid.h"

#include <algorithm>

#include "monfg/errors.h"

namespace monfg {
namespace {

void Enumerate(int remaining, int position, int resolution,
               std::vector<int>& counts,
               std::vector<std::vector<double>>& out) {
  const int m = static_cast<int>(counts.size());
  if (position == m - 1) {
    counts[position] = remaining;
    std::vector<double> point(m);
    for (int a = 0; a < m; ++a) {
      point[a] = static_cast<double>(counts[a]) / resolution;
    }
    out.push_back(std::move(point));
    return;
  }
  for (int c = remaining; c >= 0; --c) {
    counts[position] = c;
    Enumerate(remaining - c, position + 1, resolution, counts, out);
  }
}

}  // namespace

SimplexGrid::SimplexGrid(int resolution) : resolution_(resolution) {
  if (resolution < 1) throw ConfigError("grid resolution must be >= 1");
}

SimplexGrid SimplexGrid::DefaultFor(int num_actions) {
  if (num_actions <= 2) return SimplexGrid(100);
  if (num_actions == 3) return SimplexGrid(50);
  return SimplexGrid(20);
}

uint64_t SimplexGrid::Size(int resolution, int num_actions) {
  // C(n, k) with n = G + m - 1, k = m - 1, built incrementally (exact).
  const uint64_t k = num_actions - 1;
  uint64_t result = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    result = result * (resolution + i) / i;
  }
  return result;
}

std::vector<std::vector<double>> SimplexGrid::Points(int num_actions) const {
  if (num_actions < 1) throw ConfigError("grid over zero actions");
  std::vector<std::vector<double>> out;
  out.reserve(Size(num_actions));
  std::vector<int> counts(num_actions, 0);
  Enumerate(resolution_, 0, resolution_, counts, out);
  return out;
}

double RefineOnSimplices(
    const std::function<double(const std::vector<std::vector<double>>&)>&
        objective,
    std::vector<std::vector<double>>& point, double initial_step,
    double min_step) {
  double best = objective(point);
  double step = initial_step;
  constexpr double kMinImprovement = 1e-15;
  constexpr int kMaxSweepsPerStep = 10000;
  while (step >= min_step) {
    for (int sweep = 0; sweep < kMaxSweepsPerStep; ++sweep) {
      bool improved = false;
      for (auto& simplex : point) {
        const int m = static_cast<int>(simplex.size());
        for (int from = 0; from < m; ++from) {
          for (int to = 0; to < m; ++to) {
            if (from == to || simplex[from] <= 0.0) continue;
            const double shift = std::min(step, simplex[from]);
            const double old_from = simplex[from];
            const double old_to = simplex[to];
            simplex[from] = old_from - shift;
            simplex[to] = old_to + shift;
            const double value = objective(point);
            if (value > best + kMinImprovement) {
              best = value;
              improved = true;
            } else {
              simplex[from] = old_from;
              simplex[to] = old_to;
            }
          }
        }
      }
      if (!improved) break;
    }
    step /= 2.0;
  }
  return best;
}

}  // namespace monfg
