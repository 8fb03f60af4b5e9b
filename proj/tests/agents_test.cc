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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "monfg/agents.h"
#include "monfg/errors.h"
#include "monfg/rng.h"

namespace monfg {
namespace {

double Sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

ActionVectors RandomQ(Rng& rng, int actions, int d) {
  ActionVectors q(actions, PayoffVector(d));
  for (auto& v : q) {
    for (double& x : v) x = 4.0 * rng.Uniform();
  }
  return q;
}

// Oracle: J(theta) by direct softmax and scalarisation.
double OracleJ(const UtilityFunction& u, const std::vector<double>& theta,
               const ActionVectors& q) {
  double z = 0.0;
  for (double t : theta) z += std::exp(t);
  PayoffVector v(q[0].size(), 0.0);
  for (size_t a = 0; a < theta.size(); ++a) {
    for (size_t o = 0; o < v.size(); ++o) {
      v[o] += std::exp(theta[a]) / z * q[a][o];
    }
  }
  return u.Eval(v);
}

TEST_CASE("softmax is a distribution") {
  Rng rng(1);
  for (int n = 0; n < 100; ++n) {
    std::vector<double> theta(3);
    for (double& t : theta) t = -20.0 + 40.0 * rng.Uniform();
    const Strategy s = SoftmaxPolicy(theta);
    CHECK(Sum(s.probs()) == doctest::Approx(1.0).epsilon(1e-12));
    for (double p : s.probs()) CHECK(p >= 0.0);
  }
  CHECK(SoftmaxPolicy(std::vector<double>{0, 0}) == Strategy::Uniform(2));
  // Large logits do not overflow.
  const Strategy big = SoftmaxPolicy(std::vector<double>{1000.0, 0.0});
  CHECK(big[0] == doctest::Approx(1.0));
}

TEST_CASE("softmax is shift invariant") {
  const std::vector<double> theta = {0.3, -1.2, 2.0};
  const Strategy base = SoftmaxPolicy(theta);
  for (double c : {-50.0, 3.5, 100.0}) {
    std::vector<double> shifted = theta;
    for (double& t : shifted) t += c;
    const Strategy s = SoftmaxPolicy(shifted);
    for (int a = 0; a < 3; ++a) CHECK(s[a] == doctest::Approx(base[a]));
  }
}

TEST_CASE("policy gradient matches finite differences") {
  Rng rng(2024);
  const std::vector<UtilityFunction> utilities = {
      UtilityFunction::SumOfSquares(), UtilityFunction::Product(),
      UtilityFunction::Linear({0.5, 0.5})};
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const UtilityFunction& u = utilities[n % 3];
    std::vector<double> theta(3);
    for (double& t : theta) t = -2.0 + 4.0 * rng.Uniform();
    const ActionVectors q = RandomQ(rng, 3, 2);
    const std::vector<double> grad = GradTheta(u, theta, q);
    for (size_t k = 0; k < theta.size(); ++k) {
      const double h = 1e-5;
      std::vector<double> up = theta, down = theta;
      up[k] += h;
      down[k] -= h;
      const double fd = (OracleJ(u, up, q) - OracleJ(u, down, q)) / (2 * h);
      const double err = std::abs(grad[k] - fd) / std::max(1.0, std::abs(fd));
      worst = std::max(worst, err);
    }
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("policy gradient components sum to zero") {
  Rng rng(8);
  for (int n = 0; n < 50; ++n) {
    std::vector<double> theta(4);
    for (double& t : theta) t = -3.0 + 6.0 * rng.Uniform();
    const ActionVectors q = RandomQ(rng, 4, 3);
    const auto grad = GradTheta(UtilityFunction::Product(), theta, q);
    CHECK(std::abs(Sum(grad)) < 1e-10);
  }
}

TEST_CASE("objective uses the expected vector") {
  const ActionVectors q = {{4, 0}, {0, 4}};
  CHECK(Objective(UtilityFunction::Product(), Strategy::Uniform(2), q) == 4.0);
  CHECK(Objective(UtilityFunction::SumOfSquares(), Strategy::Pure(2, 0), q) ==
        16.0);
  CHECK_THROWS_AS(
      Objective(UtilityFunction::Product(), Strategy::Uniform(3), q),
      DimensionError);
}

TEST_CASE("q update") {
  PayoffVector q = {1.0, 2.0};
  QUpdate(q, std::vector<double>{1.0, 2.0}, 0.3);
  CHECK(q == PayoffVector{1.0, 2.0});

  PayoffVector r = {0.0, 0.0};
  for (int n = 0; n < 3; ++n) QUpdate(r, std::vector<double>{1.0, -2.0}, 0.5);
  CHECK(r[0] == doctest::Approx(1.0 - 0.125));
  CHECK(r[1] == doctest::Approx(-2.0 * (1.0 - 0.125)));
  CHECK_THROWS_AS(QUpdate(r, std::vector<double>{1.0}, 0.5), DimensionError);
}

TEST_CASE("q table indexing") {
  QTable q(2, 3, 2);
  q.Update(1, 2, std::vector<double>{10.0, 20.0}, 0.1);
  CHECK(q.At(1, 2) == PayoffVector{1.0, 2.0});
  CHECK(q.At(0, 2) == PayoffVector{0.0, 0.0});
  CHECK(q.Column(2)[1] == PayoffVector{1.0, 2.0});
  CHECK_THROWS_AS(q.At(2, 0), BoundsError);
  CHECK_THROWS_AS(q.Update(0, 3, std::vector<double>{1.0, 1.0}, 0.1),
                  BoundsError);
  CHECK_THROWS_AS(q.Update(0, 0, std::vector<double>{1.0}, 0.1),
                  DimensionError);
}

TEST_CASE("marginal q") {
  QTable q(2, 2, 2);
  q.Update(0, 0, std::vector<double>{4, 0}, 1.0);
  q.Update(0, 1, std::vector<double>{2, 2}, 1.0);
  q.Update(1, 0, std::vector<double>{2, 2}, 1.0);
  q.Update(1, 1, std::vector<double>{0, 4}, 1.0);
  const ActionVectors m = MarginalQ(q, Strategy({0.25, 0.75}));
  CHECK(m[0][0] == doctest::Approx(2.5));
  CHECK(m[0][1] == doctest::Approx(1.5));
  CHECK(m[1][0] == doctest::Approx(0.5));
  CHECK(m[1][1] == doctest::Approx(3.5));
  CHECK_THROWS_AS(MarginalQ(q, Strategy::Uniform(3)), DimensionError);
}

TEST_CASE("actor-critic step ascends the objective") {
  const UtilityFunction u = UtilityFunction::SumOfSquares();
  const ActionVectors q = {{4, 0}, {2, 2}};
  Theta theta = {0.0, 0.0};
  double previous = Objective(u, SoftmaxPolicy(theta), q);
  for (int n = 0; n < 20; ++n) {
    ActorCriticStep(theta, u, q, 0.1);
    const double now = Objective(u, SoftmaxPolicy(theta), q);
    CHECK(now >= previous);
    previous = now;
  }
  CHECK(SoftmaxPolicy(theta)[0] > 0.5);
}

TEST_CASE("agent shapes") {
  const UtilityFunction u = UtilityFunction::Product();
  const IndependentAgent ind(3, 2, u, {});
  CHECK(ind.theta.size() == 3);
  CHECK(ind.q.NumContexts() == 1);

  const JointActionAgent joint(2, 3, 2, u, {});
  CHECK(joint.q.NumContexts() == 3);
  CHECK(joint.opponent_policy == Strategy::Uniform(3));

  const SelfInterestedAgent self(2, 3, 2, u, {0.01, 0.01}, {0.05, 0.05});
  CHECK(self.follower_theta.size() == 3);
  CHECK(self.NoneObservation() == 3);
  CHECK(self.q.NumContexts() == 4);

  const HierarchicalAgent h(2, u, {}, IndependentAgent(2, 2, u, {}),
                            JointActionAgent(2, 2, 2, u, {}));
  CHECK(h.top_theta.size() == 2);
  CHECK(h.top_q.NumActions() == 2);
}

TEST_CASE("state hash tracks learned parameters only") {
  const UtilityFunction u = UtilityFunction::Product();
  IndependentAgent a(2, 2, u, {});
  IndependentAgent b(2, 2, u, {0.5, 0.5});
  CHECK(StateHash(a) == StateHash(b));
  a.q.Update(0, 0, std::vector<double>{1.0, 1.0}, 0.1);
  CHECK(StateHash(a) != StateHash(b));
  a = b;
  a.theta[1] = 1e-12;
  CHECK(StateHash(a) != StateHash(b));
}

TEST_CASE("zeroed rates freeze an agent") {
  const UtilityFunction u = UtilityFunction::SumOfSquares();
  HierarchicalAgent h(2, u, {}, IndependentAgent(2, 2, u, {}),
                      SelfInterestedAgent(2, 2, 2, u, {}, {}));
  ZeroRates(h);
  CHECK(h.top_rates == LearningRates{0.0, 0.0});
  CHECK(h.no_comm.rates == LearningRates{0.0, 0.0});
  const auto& self = std::get<SelfInterestedAgent>(h.comm);
  CHECK(self.leading == LearningRates{0.0, 0.0});
  CHECK(self.following == LearningRates{0.0, 0.0});
}

}  // namespace
}  // namespace monfg
