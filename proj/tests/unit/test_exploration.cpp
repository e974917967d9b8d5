/*
 * Copyright 2026 The gsde-rl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <cmath>

#include "gsde/exploration/ou.hpp"
#include "gsde/exploration/param_noise.hpp"
#include "stats.hpp"

using namespace gsde;
using namespace gsde::testing;

TEST(Ou, ZeroSigmaZeroThetaIsConstant) {
  OuProcess p(2, OuConfig{.theta = 0.0, .sigma = 0.0, .dt = 1.0});
  p.set_state({0.4, -1.2});
  Rng rng(1);
  for (int t = 0; t < 20; ++t) p.step(rng);
  EXPECT_EQ(p.state(), (std::vector<double>{0.4, -1.2}));
}

TEST(Ou, DeterministicDecay) {
  const OuConfig cfg{.theta = 0.15, .sigma = 0.0, .dt = 0.5};
  OuProcess p(1, cfg);
  p.set_state({2.0});
  Rng rng(2);
  for (int t = 1; t <= 30; ++t) {
    p.step(rng);
    EXPECT_NEAR(p.state()[0], std::pow(1.0 - cfg.theta * cfg.dt, t) * 2.0, 1e-14);
  }
}

TEST(Ou, StationaryVarianceAndAutocorrelation) {
  const OuConfig cfg{.theta = 0.15, .sigma = 0.2, .dt = 1.0};
  OuProcess p(1, cfg);
  Rng rng(3);
  for (int t = 0; t < 1000; ++t) p.step(rng);
  std::vector<double> xs(1000000);
  for (double& x : xs) x = p.step(rng)[0];
  const double rho = 1.0 - cfg.theta * cfg.dt;
  const double expected = cfg.sigma * cfg.sigma * cfg.dt / (1.0 - rho * rho);
  const double var = sample_std(xs) * sample_std(xs);
  EXPECT_LT(std::abs(var / expected - 1.0), 0.02);
  const double m = sample_mean(xs);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) num += (xs[i] - m) * (xs[i + 1] - m);
  for (double x : xs) den += (x - m) * (x - m);
  EXPECT_NEAR(num / den, rho, 0.02);
}

TEST(Ou, ResetZeroes) {
  OuProcess p(3);
  Rng rng(4);
  p.step(rng);
  p.reset();
  EXPECT_EQ(p.state(), std::vector<double>(3, 0.0));
}

TEST(Ou, ZeroSigmaFromRestIsSilent) {
  OuProcess p(2, OuConfig{.sigma = 0.0});
  Rng rng(5);
  for (int t = 0; t < 10; ++t)
    for (double v : p.step(rng)) EXPECT_EQ(v, 0.0);
}

namespace {
Mlp small_net(Rng& rng) {
  const std::vector<std::size_t> hidden{5};
  return Mlp(3, hidden, 2, Activation::kTanh, rng);
}
}  // namespace

TEST(ParamNoiseTest, ZeroStdIsIdentity) {
  Rng rng(6);
  const Mlp net = small_net(rng);
  EXPECT_EQ(perturb_params(net, 0.0, rng), net);
}

TEST(ParamNoiseTest, SeededPerturbationReproducible) {
  Rng init(7);
  const Mlp net = small_net(init);
  const Mlp before = net;
  Rng a(11), b(11);
  EXPECT_EQ(perturb_params(net, 0.3, a), perturb_params(net, 0.3, b));
  EXPECT_EQ(net, before);
  EXPECT_THROW(perturb_params(net, -1.0, a), std::invalid_argument);
}

TEST(ParamNoiseTest, PerWeightStd) {
  Rng init(8);
  const Mlp net = small_net(init);
  const auto base = net.parameters();
  Rng rng(9);
  const double sigma = 0.2;
  std::vector<double> w0, b1;
  for (int k = 0; k < 10000; ++k) {
    const Mlp p = perturb_params(net, sigma, rng);
    w0.push_back(p.parameters()[0][3] - base[0][3]);
    b1.push_back(p.parameters()[3][1] - base[3][1]);
  }
  EXPECT_LT(std::abs(sample_std(w0) / sigma - 1.0), 0.02);
  EXPECT_LT(std::abs(sample_std(b1) / sigma - 1.0), 0.02);
}

TEST(ParamNoiseTest, AdaptationRule) {
  ParamNoise pn{.stddev = 0.2, .adaptation_factor = 1.01, .target_distance = 0.2};
  EXPECT_NEAR(adapt_param_noise(pn, 0.0), 0.2 * 1.01, 1e-15);
  ParamNoise shrink{.stddev = 0.2};
  EXPECT_NEAR(adapt_param_noise(shrink, 1.0), 0.2 / 1.01, 1e-15);
  ParamNoise alt{.stddev = 0.2};
  for (int k = 0; k < 50; ++k) {
    adapt_param_noise(alt, 0.0);
    adapt_param_noise(alt, 1.0);
  }
  EXPECT_NEAR(alt.stddev, 0.2, 1e-12);
  EXPECT_THROW(adapt_param_noise(alt, -0.1), std::invalid_argument);
}

TEST(ParamNoiseTest, ActionDistanceExamples) {
  Rng rng(10);
  const Mlp net = small_net(rng);
  Matrix states(4, 3);
  for (double& v : states.data()) v = rng.normal();
  EXPECT_EQ(action_distance(net, net, states), 0.0);
  const Mlp p = perturb_params(net, 0.5, rng);
  EXPECT_EQ(action_distance(net, p, states), action_distance(p, net, states));
  const Mlp a({DenseLayer{Matrix(1, 1, 0.0), {0.5}, Activation::kIdentity}});
  const Mlp b({DenseLayer{Matrix(1, 1, 0.0), {0.9}, Activation::kIdentity}});
  EXPECT_NEAR(action_distance(a, b, Matrix(1, 1, 3.0)), 0.4, 1e-15);
  EXPECT_THROW(action_distance(a, b, Matrix(0, 1)), std::invalid_argument);
}

TEST(ParamNoiseTest, AdaptationConvergesToTarget) {
  Rng rng(12);
  const Mlp net({DenseLayer{Matrix::from_rows({{0.5, -0.3, 0.2}}), {0.1}, Activation::kIdentity}});
  Matrix states(64, 3);
  for (double& v : states.data()) v = rng.normal();
  ParamNoise pn{.stddev = 0.01};
  std::vector<double> tail;
  std::size_t above = 0;
  for (int it = 0; it < 3000; ++it) {
    const double d = action_distance(net, perturb_params(net, pn.stddev, rng), states);
    adapt_param_noise(pn, d);
    if (it >= 2000) {
      tail.push_back(d);
      above += d >= pn.target_distance;
    }
  }
  EXPECT_NEAR(sample_mean(tail), pn.target_distance, 0.04);
  EXPECT_GT(above, 200u);
  EXPECT_LT(above, 800u);
}
