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
#include <numbers>

#include "gsde/algos/sac.hpp"
#include "gsde/algos/sac_train.hpp"
#include "gsde/envs/env.hpp"
#include "gsde/error.hpp"
#include "gsde/nn/adam.hpp"
#include "gsde/seeding.hpp"
#include "stats.hpp"

using namespace gsde;
using namespace gsde::testing;

namespace {

constexpr std::size_t kObs = 3;
constexpr std::size_t kAct = 2;

SacConfig small_config(NoiseType noise) {
  SacConfig c;
  c.hidden = {8, 8};
  c.noise = noise;
  c.batch_size = 4;
  c.log_sigma_init = -0.5;
  return c;
}

ReplayBatch hand_batch(Rng& rng, std::size_t n = 4) {
  ReplayBatch b{Matrix(n, kObs), Matrix(n, kAct), Matrix(n, kObs), std::vector<double>(n), std::vector<double>(n)};
  for (double& v : b.observations.data()) v = rng.normal();
  for (double& v : b.next_observations.data()) v = rng.normal();
  for (double& v : b.actions.data()) v = rng.uniform(-0.9, 0.9);
  for (std::size_t i = 0; i < n; ++i) {
    b.rewards[i] = rng.normal();
    b.dones[i] = i == 1 ? 1.0 : 0.0;
  }
  return b;
}

// Post-activation of the last hidden layer and the network output.
std::pair<std::vector<double>, std::vector<double>> ref_latent_output(const Mlp& net, std::span<const double> in) {
  std::vector<double> x(in.begin(), in.end()), latent;
  for (const auto& layer : net.layers()) {
    latent = x;
    std::vector<double> y(layer.out_dim());
    for (std::size_t o = 0; o < layer.out_dim(); ++o) {
      double acc = layer.bias[o];
      for (std::size_t i = 0; i < layer.in_dim(); ++i) acc += layer.weight(o, i) * x[i];
      if (layer.activation == Activation::kReLU) acc = std::max(acc, 0.0);
      y[o] = acc;
    }
    x = std::move(y);
  }
  return {latent, x};
}

double ref_q(const Mlp& q, std::span<const double> s, std::span<const double> a) {
  std::vector<double> in(s.begin(), s.end());
  in.insert(in.end(), a.begin(), a.end());
  return reference_forward(q, in)[0];
}

struct RefSample {
  std::vector<double> action;
  double log_prob = 0.0;
};

// `noise_net` supplies the features of the noise path; the library treats
// them as constants, so gradient oracles pass a frozen copy of the actor.
RefSample ref_sample(const SacAgent& agent, std::span<const double> s, const SacNoiseDraw& noise, std::size_t row,
                     bool next, const Mlp* noise_net = nullptr) {
  const auto out = ref_latent_output(agent.actor, s).second;
  const auto z = ref_latent_output(noise_net ? *noise_net : agent.actor, s).first;
  RefSample r;
  for (std::size_t j = 0; j < kAct; ++j) {
    double mean, e, sd;
    if (agent.uses_gsde()) {
      mean = std::clamp(out[j], -agent.config.mean_clip, agent.config.mean_clip);
      e = 0.0;
      double var = 0.0;
      for (std::size_t i = 0; i < z.size(); ++i) {
        const double sigma = apply_variance_transform(agent.gsde->log_sigma()(i, j), agent.config.variance_transform);
        e += z[i] * sigma * noise.gsde_xi(i, j);
        var += (sigma * z[i]) * (sigma * z[i]);
      }
      sd = std::sqrt(var);
    } else {
      mean = out[j];
      sd = std::exp(std::clamp(out[kAct + j], -20.0, 2.0));
      e = sd * (next ? noise.next_xi : noise.current_xi)(row, j);
    }
    sd = std::max(sd, 1e-6);
    const double a = std::tanh(mean + e);
    r.action.push_back(a);
    r.log_prob += -0.5 * (e / sd) * (e / sd) - std::log(sd) - 0.5 * std::log(2 * std::numbers::pi) -
                  std::log(1.0 - a * a + 1e-6);
  }
  return r;
}

SacLosses ref_losses(const SacAgent& agent, const ReplayBatch& b, const SacNoiseDraw& noise,
                     const Mlp* noise_net = nullptr) {
  const std::size_t n = b.rewards.size();
  const double alpha = std::exp(agent.log_alpha);
  double c1 = 0, c2 = 0, actor = 0, lp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const RefSample nx = ref_sample(agent, b.next_observations.row(i), noise, i, true);
    const double qn = std::min(ref_q(agent.q1_target, b.next_observations.row(i), nx.action),
                               ref_q(agent.q2_target, b.next_observations.row(i), nx.action));
    const double y = b.rewards[i] + agent.config.gamma * (1 - b.dones[i]) * (qn - alpha * nx.log_prob);
    const double q1 = ref_q(agent.q1, b.observations.row(i), b.actions.row(i));
    const double q2 = ref_q(agent.q2, b.observations.row(i), b.actions.row(i));
    c1 += (q1 - y) * (q1 - y);
    c2 += (q2 - y) * (q2 - y);
    const RefSample cur = ref_sample(agent, b.observations.row(i), noise, i, false, noise_net);
    actor += alpha * cur.log_prob - std::min(ref_q(agent.q1, b.observations.row(i), cur.action),
                                             ref_q(agent.q2, b.observations.row(i), cur.action));
    lp += cur.log_prob;
  }
  SacLosses out;
  out.critic = 0.5 * (c1 / n + c2 / n);
  out.actor = actor / n;
  out.mean_log_prob = lp / n;
  out.alpha = -agent.log_alpha * (out.mean_log_prob + agent.target_entropy);
  return out;
}

double close(double a, double b) { return relative_error(a, b, 1e-12); }

}  // namespace

TEST(SacTarget, Examples) {
  EXPECT_EQ(sac_critic_target(1.5, 1.0, 10.0, 20.0, -3.0, 0.2, 0.98), 1.5);
  EXPECT_DOUBLE_EQ(sac_critic_target(1.0, 0.0, 4.0, 4.0, -2.0, 0.0, 0.9), 1.0 + 0.9 * 4.0);
  EXPECT_NEAR(sac_critic_target(1.0, 0.0, 2.0, 3.0, -1.0, 0.5, 0.98), 3.45, 1e-14);
}

TEST(SacAgentInit, TargetsCopyCriticsAndDefaults) {
  Rng rng(1);
  const SacAgent agent(kObs, kAct, SacConfig{}, rng);
  EXPECT_EQ(agent.q1, agent.q1_target);
  EXPECT_EQ(agent.q2, agent.q2_target);
  EXPECT_NE(agent.q1, agent.q2);
  EXPECT_EQ(agent.alpha(), 1.0);
  EXPECT_EQ(agent.target_entropy, -2.0);
  ASSERT_TRUE(agent.uses_gsde());
  for (double v : agent.gsde->log_sigma().data()) EXPECT_EQ(v, -3.0);
  EXPECT_EQ(agent.gsde->latent_dim(), 64u);
  EXPECT_EQ(agent.config.gamma, 0.98);
  EXPECT_EQ(agent.config.tau, 0.02);
}

TEST(SacAgentInit, DeterministicActionClipsMean) {
  Rng rng(2);
  SacConfig cfg = small_config(NoiseType::kGsde);
  SacAgent agent(kObs, kAct, cfg, rng);
  auto& last = agent.actor.layers().back();
  for (double& w : last.weight.data()) w = 0.0;
  last.bias = {5.0, -0.3};
  const auto a = agent.deterministic_action(std::vector<double>{0.1, 0.2, 0.3});
  EXPECT_EQ(a[0], std::tanh(2.0));
  EXPECT_EQ(a[1], std::tanh(-0.3));
}

class SacLossOracle : public ::testing::TestWithParam<NoiseType> {};

TEST_P(SacLossOracle, MatchesStraightLineDerivation) {
  Rng rng(3);
  SacAgent agent(kObs, kAct, small_config(GetParam()), rng);
  agent.log_alpha = std::log(0.7);
  // Make targets differ from the online critics.
  for (auto p : agent.target_parameters())
    for (double& v : p) v += 0.05 * rng.normal();
  const ReplayBatch batch = hand_batch(rng);
  const SacNoiseDraw noise = draw_sac_noise(agent, 4, rng);
  const SacLosses got = sac_losses(agent, batch, noise);
  const SacLosses want = ref_losses(agent, batch, noise);
  EXPECT_LE(close(got.critic, want.critic), 1e-10);
  EXPECT_LE(close(got.actor, want.actor), 1e-10);
  EXPECT_LE(close(got.alpha, want.alpha), 1e-10);
  EXPECT_LE(close(got.mean_log_prob, want.mean_log_prob), 1e-10);
}

INSTANTIATE_TEST_SUITE_P(Noise, SacLossOracle, ::testing::Values(NoiseType::kGsde, NoiseType::kGaussian));

TEST(SacLosses, CriticsAtTargetGiveZeroLoss) {
  Rng rng(4);
  SacAgent agent(kObs, kAct, small_config(NoiseType::kGsde), rng);
  ReplayBatch batch = hand_batch(rng);
  for (std::size_t i = 0; i < 4; ++i) {
    batch.dones[i] = 1.0;
    batch.rewards[i] = 0.625;
  }
  for (Mlp* q : {&agent.q1, &agent.q2}) {
    for (double& w : q->layers().back().weight.data()) w = 0.0;
    q->layers().back().bias = {0.625};
  }
  EXPECT_EQ(sac_losses(agent, batch, draw_sac_noise(agent, 4, rng)).critic, 0.0);
}

TEST(SacLosses, AlphaGradientVanishesAtTargetEntropy) {
  Rng rng(5);
  SacAgent agent(kObs, kAct, small_config(NoiseType::kGsde), rng);
  const ReplayBatch batch = hand_batch(rng);
  const SacNoiseDraw noise = draw_sac_noise(agent, 4, rng);
  const ActorSample s = sample_actor(agent, batch.observations, noise, false);
  agent.target_entropy = -sample_mean(s.log_prob);
  EXPECT_EQ(sac_alpha_gradient(agent, s.log_prob), 0.0);
}

TEST(SacLosses, AlphaGradientMatchesFiniteDifference) {
  Rng rng(6);
  SacAgent agent(kObs, kAct, small_config(NoiseType::kGaussian), rng);
  const ReplayBatch batch = hand_batch(rng);
  const SacNoiseDraw noise = draw_sac_noise(agent, 4, rng);
  const ActorSample s = sample_actor(agent, batch.observations, noise, false);
  const double fd = central_difference(agent.log_alpha, 1e-6, [&] { return sac_losses(agent, batch, noise).alpha; });
  EXPECT_LE(relative_error(sac_alpha_gradient(agent, s.log_prob), fd, 1e-8), 1e-7);
}

struct ActorCase {
  NoiseType noise;
  VarianceTransform transform;
  double mean_clip;
};

class SacActorGradient : public ::testing::TestWithParam<ActorCase> {};

TEST_P(SacActorGradient, MatchesFiniteDifference) {
  const ActorCase c = GetParam();
  Rng rng(7);
  SacConfig cfg = small_config(c.noise);
  cfg.variance_transform = c.transform;
  cfg.mean_clip = c.mean_clip;
  for (int trial = 0; trial < 3; ++trial) {
    SacAgent agent(kObs, kAct, cfg, rng);
    agent.log_alpha = std::log(0.3);
    if (agent.gsde)
      for (double& v : agent.gsde->log_sigma().data()) v = rng.uniform(-1.5, 0.5);
    const ReplayBatch batch = hand_batch(rng);
    const SacNoiseDraw noise = draw_sac_noise(agent, 4, rng);
    const auto grads = sac_actor_gradient(agent, sample_actor(agent, batch.observations, noise, false));
    const Mlp frozen = agent.actor;
    auto params = agent.actor_parameters();
    ASSERT_EQ(grads.size(), params.size());
    for (std::size_t p = 0; p < params.size(); ++p) {
      for (std::size_t k = 0; k < params[p].size(); ++k) {
        const double fd =
            central_difference(params[p][k], 1e-6, [&] { return ref_losses(agent, batch, noise, &frozen).actor; });
        EXPECT_LE(relative_error(grads[p][k], fd, 1e-6), 1e-5) << "tensor " << p << " entry " << k << " got " << grads[p][k] << " fd " << fd;
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Variants, SacActorGradient,
                         ::testing::Values(ActorCase{NoiseType::kGsde, VarianceTransform::kExp, 2.0},
                                           ActorCase{NoiseType::kGsde, VarianceTransform::kExpln, 2.0},
                                           ActorCase{NoiseType::kGsde, VarianceTransform::kExp, 0.05},
                                           ActorCase{NoiseType::kGaussian, VarianceTransform::kExp, 2.0}));

TEST(SacCriticGradient, MatchesFiniteDifference) {
  Rng rng(8);
  SacAgent agent(kObs, kAct, small_config(NoiseType::kGsde), rng);
  const ReplayBatch batch = hand_batch(rng);
  const SacNoiseDraw noise = draw_sac_noise(agent, 4, rng);
  // Targets only depend on the target networks, so hold them fixed.
  std::vector<double> y(4);
  {
    const ActorSample nx = sample_actor(agent, batch.next_observations, noise, true);
    for (std::size_t i = 0; i < 4; ++i) {
      const double qn = std::min(ref_q(agent.q1_target, batch.next_observations.row(i), nx.action.row(i)),
                                 ref_q(agent.q2_target, batch.next_observations.row(i), nx.action.row(i)));
      y[i] = sac_critic_target(batch.rewards[i], batch.dones[i], qn, qn, nx.log_prob[i], agent.alpha(), 0.98);
    }
  }
  const auto grads = sac_critic_gradient(agent, batch, y);
  auto params = agent.critic_parameters();
  ASSERT_EQ(grads.size(), params.size());
  for (std::size_t p = 0; p < params.size(); ++p)
    for (std::size_t k = 0; k < params[p].size(); ++k) {
      const double fd = central_difference(params[p][k], 1e-6, [&] { return sac_losses(agent, batch, noise).critic; });
      EXPECT_LE(relative_error(grads[p][k], fd, 1e-6), 1e-5);
    }
}

TEST(SoftUpdate, Examples) {
  std::vector<double> online{2.0, -1.0}, target{1.0, 3.0};
  std::vector<std::span<const double>> on{online};
  std::vector<std::span<double>> tg{target};
  soft_update(on, tg, 0.0);
  EXPECT_EQ(target, (std::vector<double>{1.0, 3.0}));
  soft_update(on, tg, 0.02);
  EXPECT_NEAR(target[0], 1.02, 1e-15);
  soft_update(on, tg, 1.0);
  EXPECT_EQ(target, online);
  std::vector<double> wrong(3);
  std::vector<std::span<double>> bad{wrong};
  EXPECT_THROW(soft_update(on, bad, 0.5), ShapeError);
}

TEST(SoftUpdate, GeometricConvergence) {
  Rng rng(9);
  SacAgent agent(kObs, kAct, small_config(NoiseType::kGsde), rng);
  for (auto p : agent.target_parameters())
    for (double& v : p) v += rng.normal();
  auto distance = [&] {
    double s = 0.0;
    const auto on = agent.critic_parameters();
    const auto tg = agent.target_parameters();
    for (std::size_t p = 0; p < on.size(); ++p)
      for (std::size_t k = 0; k < on[p].size(); ++k) s += (on[p][k] - tg[p][k]) * (on[p][k] - tg[p][k]);
    return std::sqrt(s);
  };
  const double d0 = distance();
  const auto online = std::as_const(agent).critic_parameters();
  for (int k = 1; k <= 200; ++k) {
    soft_update(online, agent.target_parameters(), 0.02);
    if (k % 50 == 0) {
      EXPECT_LE(relative_error(distance(), d0 * std::pow(0.98, k)), 1e-9);
    }
  }
}

TEST(SacGradientStep, UpdatesAndStaysFinite) {
  Rng rng(10);
  for (NoiseType noise : {NoiseType::kGsde, NoiseType::kGaussian}) {
    SacAgent agent(kObs, kAct, small_config(noise), rng);
    const SacAgent before = agent;
    const ReplayBatch batch = hand_batch(rng, 16);
    for (int k = 0; k < 20; ++k) sac_gradient_step(agent, batch, rng);
    EXPECT_TRUE(agent.all_finite());
    EXPECT_NE(agent.actor, before.actor);
    EXPECT_NE(agent.q1, before.q1);
    EXPECT_NE(agent.q1_target, before.q1_target);
    EXPECT_NE(agent.log_alpha, before.log_alpha);
    EXPECT_EQ(agent.critic_optimizer.step, 20);
  }
}

TEST(SacGradientStep, NonFiniteBatchLeavesAgentUntouched) {
  Rng rng(11);
  SacAgent agent(kObs, kAct, small_config(NoiseType::kGsde), rng);
  ReplayBatch batch = hand_batch(rng);
  batch.rewards[2] = std::nan("");
  const SacAgent before = agent;
  EXPECT_THROW(sac_gradient_step(agent, batch, rng), NonFiniteError);
  EXPECT_EQ(agent, before);
}

TEST(SacGradientStep, RejectsMismatchedBatch) {
  Rng rng(12);
  SacAgent agent(kObs, kAct, small_config(NoiseType::kGsde), rng);
  ReplayBatch batch = hand_batch(rng);
  batch.dones.pop_back();
  EXPECT_THROW(sac_gradient_step(agent, batch, rng), ShapeError);
}

TEST(SacExplorerTest, GsdeResamplesEveryNSteps) {
  Rng rng(13);
  SacConfig cfg = small_config(NoiseType::kGsde);
  cfg.gsde_interval = SampleInterval(3);
  SacAgent agent(kObs, kAct, cfg, rng);
  SacExplorer ex(agent, cfg);
  ex.episode_start(agent, rng);
  const std::vector<double> obs{0.1, -0.2, 0.3};
  Matrix prev = agent.gsde->theta_eps();
  for (int call = 1; call <= 10; ++call) {
    const auto a = ex.act(agent, obs, rng);
    for (double v : a) EXPECT_LT(std::abs(v), 1.0);
    const bool changed = agent.gsde->theta_eps() != prev;
    EXPECT_EQ(changed, call > 1 && (call - 1) % 3 == 0) << call;
    prev = agent.gsde->theta_eps();
  }
}

TEST(SacExplorerTest, EpisodicNoiseIsConstantWithinEpisode) {
  Rng rng(14);
  SacConfig cfg = small_config(NoiseType::kGsde);
  cfg.gsde_interval = SampleInterval::episodic();
  SacAgent agent(kObs, kAct, cfg, rng);
  SacExplorer ex(agent, cfg);
  ex.episode_start(agent, rng);
  const Matrix theta = agent.gsde->theta_eps();
  const std::vector<double> obs{0.5, 0.5, -0.5};
  const auto first = ex.act(agent, obs, rng);
  for (int k = 0; k < 500; ++k) EXPECT_EQ(ex.act(agent, obs, rng), first);
  EXPECT_EQ(agent.gsde->theta_eps(), theta);
  ex.episode_start(agent, rng);
  EXPECT_NE(agent.gsde->theta_eps(), theta);
}

TEST(SacExplorerTest, BaselinesStayInBounds) {
  Rng rng(15);
  for (NoiseType noise : {NoiseType::kNone, NoiseType::kGaussian, NoiseType::kOu, NoiseType::kParam}) {
    SacConfig cfg = small_config(noise);
    SacAgent agent(kObs, kAct, cfg, rng);
    SacExplorer ex(agent, cfg);
    ex.episode_start(agent, rng);
    Matrix states(20, kObs);
    for (double& v : states.data()) v = rng.normal();
    for (std::size_t r = 0; r < 20; ++r)
      for (double v : ex.act(agent, states.row(r), rng)) EXPECT_LE(std::abs(v), 1.0);
    if (noise == NoiseType::kNone) {
      EXPECT_EQ(ex.act(agent, states.row(0), rng), agent.deterministic_action(states.row(0)));
    }
    if (noise == NoiseType::kParam) {
      EXPECT_NE(ex.perturbed, agent.actor);
      const double before = ex.param.stddev;
      ex.episode_end(agent, states);
      EXPECT_NE(ex.param.stddev, before);
    }
  }
}

namespace {
SacConfig train_config(NoiseType noise) {
  SacConfig c;
  c.hidden = {16, 16};
  c.batch_size = 16;
  c.warmup_steps = 100;
  c.noise = noise;
  return c;
}
}  // namespace

TEST(SacTrain, ZeroBudgetLeavesAgentUntrained) {
  auto env = make_env({.id = "double_integrator"});
  SeedStreams streams = seed_streams(5);
  SeedStreams fresh = seed_streams(5);
  const SacConfig cfg = train_config(NoiseType::kGsde);
  const SacTrainResult r = sac_train(cfg, TrainSettings{.total_steps = 0}, *env, streams);
  EXPECT_TRUE(r.log.empty());
  EXPECT_EQ(r.steps, 0u);
  EXPECT_EQ(r.buffer.size(), 0u);
  EXPECT_EQ(r.agent, SacAgent(env->observation_dim(), env->action_dim(), cfg, fresh.policy_init));
}

TEST(SacTrain, NoNoiseDuringWarmupIsDeterministic) {
  auto env = make_env({.id = "double_integrator"});
  SeedStreams streams = seed_streams(6);
  SacConfig cfg = train_config(NoiseType::kNone);
  cfg.warmup_steps = 1000;
  const SacTrainResult r = sac_train(cfg, TrainSettings{.total_steps = 150, .eval_episodes = 1}, *env, streams);
  ASSERT_EQ(r.buffer.size(), 150u);
  EXPECT_EQ(r.gradient_steps, 0u);
  for (std::size_t i = 0; i < r.buffer.size(); ++i) {
    const auto expected = r.agent.deterministic_action(r.buffer.observation(i));
    const auto stored = r.buffer.action(i);
    EXPECT_TRUE(std::equal(stored.begin(), stored.end(), expected.begin()));
  }
  EXPECT_EQ(r.log.episode_count(), 2u);
  EXPECT_EQ(r.log.rows().back().timestep, 150u);
}

TEST(SacTrain, BitReproducible) {
  auto env = make_env({.id = "pendulum"});
  const SacConfig cfg = train_config(NoiseType::kGsde);
  const TrainSettings settings{.total_steps = 500, .eval_interval = 250, .eval_episodes = 2};
  SeedStreams a = seed_streams(7), b = seed_streams(7);
  const SacTrainResult ra = sac_train(cfg, settings, *env, a);
  const SacTrainResult rb = sac_train(cfg, settings, *env, b);
  EXPECT_EQ(ra.log.rows(), rb.log.rows());
  EXPECT_EQ(ra.agent, rb.agent);
  EXPECT_EQ(ra.buffer, rb.buffer);
  EXPECT_GT(ra.gradient_steps, 0u);
}

TEST(SacTrain, EvaluationDoesNotPerturbTraining) {
  auto env = make_env({.id = "double_integrator"});
  const SacConfig cfg = train_config(NoiseType::kGsde);
  SeedStreams a = seed_streams(8), b = seed_streams(8);
  const SacTrainResult ra = sac_train(cfg, TrainSettings{.total_steps = 400, .eval_interval = 0, .eval_episodes = 1}, *env, a);
  const SacTrainResult rb = sac_train(cfg, TrainSettings{.total_steps = 400, .eval_interval = 50, .eval_episodes = 3}, *env, b);
  EXPECT_EQ(ra.agent, rb.agent);
  EXPECT_EQ(ra.buffer, rb.buffer);
}

TEST(SacTrain, StorageIndependentOfUpdateSettings) {
  // Collection and updates alternate per episode, so the first episode's
  // transitions cannot depend on anything the updates do.
  auto env = make_env({.id = "double_integrator"});
  SacConfig a_cfg = train_config(NoiseType::kGsde), b_cfg = a_cfg;
  a_cfg.warmup_steps = b_cfg.warmup_steps = 0;
  b_cfg.batch_size = 64;
  b_cfg.learning_rate = 1e-2;
  SeedStreams a = seed_streams(9), b = seed_streams(9);
  const TrainSettings settings{.total_steps = 300, .eval_interval = 0, .eval_episodes = 1};
  const SacTrainResult ra = sac_train(a_cfg, settings, *env, a);
  const SacTrainResult rb = sac_train(b_cfg, settings, *env, b);
  for (std::size_t i = 0; i < 100; ++i) {
    EXPECT_TRUE(std::ranges::equal(ra.buffer.observation(i), rb.buffer.observation(i)));
    EXPECT_TRUE(std::ranges::equal(ra.buffer.action(i), rb.buffer.action(i)));
  }
}

TEST(SacTrain, EveryNoiseTypeRuns) {
  auto env = make_env({.id = "pendulum"});
  for (NoiseType noise : {NoiseType::kNone, NoiseType::kGaussian, NoiseType::kOu, NoiseType::kParam, NoiseType::kGsde}) {
    SeedStreams s = seed_streams(10);
    const SacTrainResult r = sac_train(train_config(noise), TrainSettings{.total_steps = 400, .eval_episodes = 1}, *env, s);
    EXPECT_FALSE(r.error.has_value()) << to_string(noise);
    EXPECT_TRUE(r.agent.all_finite());
    EXPECT_EQ(r.log.episode_count(), 2u);
    EXPECT_EQ(r.gradient_steps, 400u);
    ASSERT_TRUE(r.log.mean_train_continuity().has_value());
  }
}
