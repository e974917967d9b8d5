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
#include <filesystem>
#include <fstream>
#include <numbers>

#include "gsde/algos/checkpoint.hpp"
#include "gsde/algos/gae.hpp"
#include "gsde/algos/normalizer.hpp"
#include "gsde/algos/ppo.hpp"
#include "gsde/algos/ppo_train.hpp"
#include "gsde/algos/sac.hpp"
#include "gsde/envs/env.hpp"
#include "gsde/error.hpp"
#include "gsde/seeding.hpp"
#include "stats.hpp"

using namespace gsde;
using namespace gsde::testing;

namespace {

std::vector<double> brute_force_gae(std::span<const double> r, std::span<const double> v, std::span<const double> d,
                                    double last, double gamma, double lambda) {
  const std::size_t n = r.size();
  std::vector<double> delta(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double next = t + 1 < n ? v[t + 1] : last;
    delta[t] = r[t] + gamma * (1 - d[t]) * next - v[t];
  }
  std::vector<double> adv(n, 0.0);
  for (std::size_t t = 0; t < n; ++t) {
    double weight = 1.0;
    for (std::size_t l = 0; t + l < n; ++l) {
      adv[t] += weight * delta[t + l];
      weight *= gamma * lambda * (1 - d[t + l]);
      if (weight == 0.0) break;
    }
  }
  return adv;
}

PpoConfig small_ppo(NoiseType noise) {
  PpoConfig c;
  c.hidden = {8, 8};
  c.noise = noise;
  c.workers = 1;
  c.ent_coef = 0.01;
  return c;
}

PpoBatch random_batch(const PpoAgent& agent, Rng& rng, std::size_t n, double ratio_spread) {
  PpoBatch b{Matrix(n, agent.obs_dim()), Matrix(n, agent.action_dim())};
  for (double& v : b.observations.data()) v = rng.normal();
  for (double& v : b.actions.data()) v = rng.normal(0.0, 0.5);
  const PpoEvaluation ev = ppo_evaluate(agent, b.observations, b.actions);
  for (std::size_t i = 0; i < n; ++i) {
    b.old_log_probs.push_back(ev.log_probs[i] + rng.uniform(-ratio_spread, ratio_spread));
    b.advantages.push_back(rng.normal());
    b.returns.push_back(rng.normal());
  }
  return b;
}

// Straight-line loss in extended precision; `noise_net` supplies the gSDE
// features (held constant by the library's gradient).
struct RefTerms {
  long double policy, value, entropy, total;
};

RefTerms ref_ppo_terms(const PpoAgent& agent, const PpoBatch& b, const Mlp* noise_net) {
  using R = long double;
  const std::size_t n = b.old_log_probs.size(), a = agent.action_dim();
  R mean_adv = 0.0L;
  for (double x : b.advantages) mean_adv += x;
  mean_adv /= n;
  R ss = 0.0L;
  for (double x : b.advantages) ss += (x - mean_adv) * (x - mean_adv);
  const R sd_adv = std::sqrt(ss / (n - 1));
  const R c = agent.config.clip_range;
  const R log_2pi = std::log(2.0L * std::numbers::pi_v<R>);
  R surr = 0, vl = 0, ent = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto obs = b.observations.row(i);
    const auto mu = reference_forward_ext(agent.policy, obs);
    const auto z = reference_forward_ext(noise_net ? *noise_net : agent.policy, obs, true);
    R lp = 0.0L;
    for (std::size_t j = 0; j < a; ++j) {
      R sd;
      if (agent.uses_gsde()) {
        R var = 0.0L;
        for (std::size_t k = 0; k < z.size(); ++k) {
          const R s = apply_variance_transform(agent.log_sigma(k, j), agent.config.variance_transform) * z[k];
          var += s * s;
        }
        sd = std::sqrt(var);
      } else {
        sd = std::exp(static_cast<R>(std::clamp(agent.log_std[j], -20.0, 2.0)));
      }
      sd = std::max(sd, 1e-6L);
      const R e = (b.actions(i, j) - mu[j]) / sd;
      lp += -0.5L * e * e - std::log(sd) - 0.5L * log_2pi;
      ent += 0.5L + 0.5L * log_2pi + std::log(sd);
    }
    const R ratio = std::exp(lp - b.old_log_probs[i]);
    const R adv = (b.advantages[i] - mean_adv) / (sd_adv + 1e-8L);
    surr += std::min(ratio * adv, std::clamp(ratio, 1 - c, 1 + c) * adv);
    const R v = reference_forward_ext(agent.value, obs)[0];
    vl += (v - b.returns[i]) * (v - b.returns[i]);
  }
  const R policy = -surr / n, value = vl / n, entropy = ent / n;
  return {policy, value, entropy, policy + agent.config.vf_coef * value - agent.config.ent_coef * entropy};
}

PpoLoss ref_ppo_loss(const PpoAgent& agent, const PpoBatch& b, const Mlp* noise_net = nullptr) {
  const RefTerms t = ref_ppo_terms(agent, b, noise_net);
  PpoLoss out;
  out.policy = static_cast<double>(t.policy);
  out.value = static_cast<double>(t.value);
  out.entropy = static_cast<double>(t.entropy);
  out.total = static_cast<double>(t.total);
  return out;
}

long double ref_ppo_total(const PpoAgent& agent, const PpoBatch& b, const Mlp* noise_net) {
  return ref_ppo_terms(agent, b, noise_net).total;
}

}  // namespace

TEST(Gae, LambdaZeroGivesTdError) {
  const std::vector<double> r{1.0, -0.5, 2.0}, v{0.3, 0.1, -0.4}, d{0.0, 0.0, 1.0};
  const GaeResult g = gae_compute(r, v, d, 9.0, 0.9, 0.0);
  EXPECT_DOUBLE_EQ(g.advantages[0], 1.0 + 0.9 * 0.1 - 0.3);
  EXPECT_DOUBLE_EQ(g.advantages[1], -0.5 + 0.9 * -0.4 - 0.1);
  EXPECT_DOUBLE_EQ(g.advantages[2], 2.0 - -0.4);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(g.returns[i], g.advantages[i] + v[i]);
}

TEST(Gae, GammaZeroGivesRewardMinusValue) {
  const std::vector<double> r{1.0, -0.5, 2.0, 0.25}, v{0.3, 0.1, -0.4, 1.0}, d{0, 0, 0, 0};
  const GaeResult g = gae_compute(r, v, d, 5.0, 0.0, 0.95);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(g.advantages[i], r[i] - v[i]);
}

TEST(Gae, MatchesBruteForce) {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 6;
    std::vector<double> r(n), v(n), d(n);
    for (std::size_t i = 0; i < n; ++i) {
      r[i] = rng.normal();
      v[i] = rng.normal();
      d[i] = rng.uniform(0, 1) < 0.2 ? 1.0 : 0.0;
    }
    const double last = rng.normal(), gamma = rng.uniform(0.8, 0.999), lambda = rng.uniform(0.0, 1.0);
    const GaeResult g = gae_compute(r, v, d, last, gamma, lambda);
    const auto bf = brute_force_gae(r, v, d, last, gamma, lambda);
    for (std::size_t i = 0; i < n; ++i) EXPECT_LE(relative_error(g.advantages[i], bf[i], 1e-12), 1e-12);
  }
  EXPECT_THROW(gae_compute(std::vector<double>(3), std::vector<double>(2), std::vector<double>(3), 0, 0.9, 0.9), ShapeError);
}

TEST(AdvantageNormalization, ZeroMeanUnitStd) {
  Rng rng(2);
  std::vector<double> a(50);
  for (double& x : a) x = rng.normal(3.0, 2.0);
  const auto n = normalize_advantages(a);
  EXPECT_NEAR(sample_mean(n), 0.0, 1e-12);
  EXPECT_NEAR(sample_std(n), 1.0, 1e-6);
  EXPECT_EQ(normalize_advantages(std::vector<double>{4.2}), std::vector<double>{0.0});
}

TEST(PpoLossTest, EqualLogProbsGiveMeanAdvantage) {
  Rng rng(3);
  const PpoAgent agent(3, 2, small_ppo(NoiseType::kGsde), rng);
  const PpoBatch b = random_batch(agent, rng, 8, 0.0);
  const PpoLoss l = ppo_loss(agent, b);
  EXPECT_NEAR(l.policy, -sample_mean(normalize_advantages(b.advantages)), 1e-15);
  EXPECT_EQ(l.clip_fraction, 0.0);
  EXPECT_NEAR(l.approx_kl, 0.0, 1e-15);
}

TEST(PpoLossTest, ClipActiveForLargeRatio) {
  Rng rng(4);
  const PpoAgent agent(3, 1, small_ppo(NoiseType::kGaussian), rng);
  PpoBatch b = random_batch(agent, rng, 2, 0.0);
  b.old_log_probs[0] -= std::log(2.0);
  b.advantages = {1.0, -1.0};
  const auto adv = normalize_advantages(b.advantages);
  const PpoLoss l = ppo_loss(agent, b);
  EXPECT_NEAR(l.policy, -(1.4 * adv[0] + adv[1]) / 2.0, 1e-12);
  EXPECT_EQ(l.clip_fraction, 0.5);
}

class PpoOracle : public ::testing::TestWithParam<std::pair<NoiseType, VarianceTransform>> {};

TEST_P(PpoOracle, LossMatchesStraightLine) {
  Rng rng(5);
  PpoConfig cfg = small_ppo(GetParam().first);
  cfg.variance_transform = GetParam().second;
  PpoAgent agent(3, 2, cfg, rng);
  const PpoBatch b = random_batch(agent, rng, 8, 0.6);
  const PpoLoss got = ppo_loss(agent, b), want = ref_ppo_loss(agent, b);
  EXPECT_LE(relative_error(got.policy, want.policy, 1e-14), 1e-12);
  EXPECT_LE(relative_error(got.value, want.value, 1e-14), 1e-12);
  EXPECT_LE(relative_error(got.entropy, want.entropy, 1e-14), 1e-12);
  EXPECT_LE(relative_error(got.total, want.total, 1e-14), 1e-12);
}

TEST_P(PpoOracle, GradientMatchesFiniteDifference) {
  Rng rng(6);
  PpoConfig cfg = small_ppo(GetParam().first);
  cfg.variance_transform = GetParam().second;
  for (int trial = 0; trial < 3; ++trial) {
    PpoAgent agent(3, 2, cfg, rng);
    if (agent.uses_gsde())
      for (double& v : agent.log_sigma.data()) v = rng.uniform(-1.0, 0.5);
    else
      for (double& v : agent.log_std) v = rng.uniform(-1.0, 0.5);
    const PpoBatch b = random_batch(agent, rng, 8, 0.6);
    const Mlp frozen = agent.policy;
    const auto grads = ppo_gradient(agent, b);
    auto params = agent.parameters();
    ASSERT_EQ(grads.size(), params.size());
    for (std::size_t p = 0; p < params.size(); ++p)
      for (std::size_t k = 0; k < params[p].size(); ++k) {
        const double fd = central_difference_ext(params[p][k], 1e-6, [&] { return ref_ppo_total(agent, b, &frozen); });
        EXPECT_LE(relative_error(grads[p][k], fd, 1e-6), 1e-5) << "tensor " << p << " entry " << k << " got " << grads[p][k] << " fd " << fd;
      }
  }
}

INSTANTIATE_TEST_SUITE_P(Variants, PpoOracle,
                         ::testing::Values(std::pair{NoiseType::kGsde, VarianceTransform::kExp},
                                           std::pair{NoiseType::kGsde, VarianceTransform::kExpln},
                                           std::pair{NoiseType::kGaussian, VarianceTransform::kExp}));

TEST(PpoLossTest, NonFiniteRatioRejected) {
  Rng rng(7);
  PpoAgent agent(3, 1, small_ppo(NoiseType::kGaussian), rng);
  PpoBatch b = random_batch(agent, rng, 4, 0.0);
  b.old_log_probs[1] = -1e6;
  EXPECT_THROW(ppo_loss(agent, b), NonFiniteError);
  const PpoAgent before = agent;
  EXPECT_THROW(ppo_update_minibatch(agent, b), NonFiniteError);
  EXPECT_EQ(agent, before);
}

TEST(PpoUpdate, ClipsAndSteps) {
  Rng rng(8);
  PpoAgent agent(3, 2, small_ppo(NoiseType::kGsde), rng);
  const PpoAgent before = agent;
  const PpoBatch b = random_batch(agent, rng, 16, 0.3);
  ppo_update_minibatch(agent, b);
  EXPECT_NE(agent.policy, before.policy);
  EXPECT_EQ(agent.optimizer.step, 1);
  EXPECT_TRUE(agent.all_finite());
}

TEST(PpoAgentInit, DefaultsAndValidation) {
  Rng rng(9);
  const PpoAgent g(3, 1, PpoConfig{}, rng);
  EXPECT_EQ(g.config.resolved_activation(), Activation::kReLU);
  for (double v : g.log_sigma.data()) EXPECT_EQ(v, -2.0);
  EXPECT_EQ(g.config.workers, 16u);
  EXPECT_EQ(g.config.steps_per_rollout, 512u);
  EXPECT_EQ(g.config.clip_range, 0.4);
  PpoConfig gauss;
  gauss.noise = NoiseType::kGaussian;
  const PpoAgent n(3, 1, gauss, rng);
  EXPECT_EQ(n.config.resolved_activation(), Activation::kTanh);
  EXPECT_EQ(n.log_std, std::vector<double>{0.0});
  PpoConfig ou;
  ou.noise = NoiseType::kOu;
  EXPECT_THROW(PpoAgent(3, 1, ou, rng), std::invalid_argument);
}

TEST(Normalizer, RunningStatsMatchPooledMoments) {
  Rng rng(10);
  RunningMeanStd rms(2, 0.0 + 1e-12);
  std::vector<double> all;
  for (int chunk = 0; chunk < 5; ++chunk) {
    std::vector<double> batch(2 * 37);
    for (double& v : batch) v = rng.normal(1.5, 3.0);
    rms.update(batch, 37);
    all.insert(all.end(), batch.begin(), batch.end());
  }
  for (std::size_t j = 0; j < 2; ++j) {
    double m = 0.0, v = 0.0;
    for (std::size_t i = j; i < all.size(); i += 2) m += all[i];
    m /= 185.0;
    for (std::size_t i = j; i < all.size(); i += 2) v += (all[i] - m) * (all[i] - m);
    v /= 185.0;
    EXPECT_NEAR(rms.mean()[j], m, 1e-9);
    EXPECT_NEAR(rms.var()[j], v, 1e-9);
  }
  EXPECT_THROW(rms.update(std::vector<double>(3), 2), ShapeError);
}

TEST(Normalizer, ClipsObservationsAndRewards) {
  VecNormalize vn(2, 0.99);
  vn.obs_stats.restore({0.0, 1.0}, {1.0, 0.01}, 10.0);
  const auto o = vn.normalize_observation(std::vector<double>{3.0, 100.0});
  EXPECT_NEAR(o[0], 3.0, 1e-7);
  EXPECT_EQ(o[1], 10.0);
  vn.return_stats.restore({0.0}, {4.0}, 10.0);
  EXPECT_NEAR(vn.normalize_reward(-1.0), -0.5, 1e-8);
  EXPECT_EQ(vn.normalize_reward(-1e3), -10.0);
}

namespace {
PpoConfig rollout_config(std::size_t workers, SampleInterval n) {
  PpoConfig c;
  c.hidden = {16, 16};
  c.workers = workers;
  c.gsde_interval = n;
  return c;
}
}  // namespace

TEST(Rollout, SingleWorkerFullIntervalKeepsNoise) {
  auto env = make_env({.id = "double_integrator"});
  Rng rng(11);
  const PpoAgent agent(env->observation_dim(), 1, rollout_config(1, SampleInterval(64)), rng);
  auto workers = make_ppo_workers(agent, *env, 3);
  const RolloutBuffer buf = collect_rollout(agent, workers, 64, 0, false);
  EXPECT_EQ(buf.resamples[0], 1u);
  EXPECT_EQ(workers[0].gsde->theta_eps(), buf.initial_theta[0]);
  // The executed noise equals theta^T z at every step.
  for (std::size_t k = 0; k < 64; ++k) {
    const ForwardPass p = mlp_forward(agent.policy, Matrix::row_vector(buf.observations[0].row(k)));
    const auto u = gsde_action(p.output().row(0), buf.initial_theta[0], p.latent().row(0));
    EXPECT_EQ(u[0], buf.actions[0](k, 0));
  }
  const RolloutBuffer next = collect_rollout(agent, workers, 64, 64, false);
  EXPECT_NE(next.initial_theta[0], buf.initial_theta[0]);
}

TEST(Rollout, ResampleCountFollowsInterval) {
  auto env = make_env({.id = "double_integrator"});
  Rng rng(12);
  const PpoAgent agent(env->observation_dim(), 1, rollout_config(2, SampleInterval(4)), rng);
  auto workers = make_ppo_workers(agent, *env, 4);
  const RolloutBuffer buf = collect_rollout(agent, workers, 32, 0, false);
  EXPECT_EQ(buf.resamples, (std::vector<std::size_t>{8, 8}));
}

TEST(Rollout, EpisodicResamplesAtEpisodeStart) {
  auto env = make_env({.id = "double_integrator"});
  Rng rng(13);
  const PpoAgent agent(env->observation_dim(), 1, rollout_config(1, SampleInterval::episodic()), rng);
  auto workers = make_ppo_workers(agent, *env, 5);
  const RolloutBuffer buf = collect_rollout(agent, workers, 250, 0, false);
  EXPECT_EQ(buf.resamples[0], 3u);  // episodes start at steps 0, 100 and 200
  EXPECT_EQ(buf.episodes.size(), 2u);
}

TEST(Rollout, SixteenWorkersDrawDistinctNoise) {
  auto env = make_env({.id = "double_integrator"});
  Rng rng(14);
  const PpoAgent agent(env->observation_dim(), 1, rollout_config(16, SampleInterval(4)), rng);
  auto workers = make_ppo_workers(agent, *env, 6);
  const RolloutBuffer buf = collect_rollout(agent, workers, 8, 0, true);
  ASSERT_EQ(buf.initial_theta.size(), 16u);
  for (std::size_t a = 0; a < 16; ++a)
    for (std::size_t b = a + 1; b < 16; ++b) EXPECT_NE(buf.initial_theta[a], buf.initial_theta[b]);
  auto again = make_ppo_workers(agent, *env, 6);
  EXPECT_EQ(collect_rollout(agent, again, 8, 0, true).initial_theta, buf.initial_theta);
}

TEST(Rollout, SerialEqualsParallel) {
  for (NoiseType noise : {NoiseType::kGsde, NoiseType::kGaussian}) {
    auto env = make_env({.id = "pendulum"});
    Rng rng(15);
    PpoConfig cfg = rollout_config(4, SampleInterval(4));
    cfg.noise = noise;
    const PpoAgent agent(env->observation_dim(), 1, cfg, rng);
    auto serial = make_ppo_workers(agent, *env, 7);
    auto parallel = make_ppo_workers(agent, *env, 7);
    for (int r = 0; r < 3; ++r) {
      const RolloutBuffer a = collect_rollout(agent, serial, 150, r * 600, false);
      const RolloutBuffer b = collect_rollout(agent, parallel, 150, r * 600, true);
      EXPECT_EQ(a, b);
    }
  }
}

TEST(Rollout, EpisodeTimestampsInterleaveWorkers) {
  auto env = make_env({.id = "double_integrator"});
  Rng rng(16);
  const PpoAgent agent(env->observation_dim(), 1, rollout_config(3, SampleInterval(4)), rng);
  auto workers = make_ppo_workers(agent, *env, 8);
  const RolloutBuffer buf = collect_rollout(agent, workers, 100, 30, false);
  ASSERT_EQ(buf.episodes.size(), 3u);
  EXPECT_EQ(buf.episodes[0].timestep, 30u + 99 * 3 + 1);
  EXPECT_EQ(buf.episodes[2].timestep, 30u + 99 * 3 + 3);
  const PpoBatch flat = flatten_rollout(buf, 0.99, 0.9);
  EXPECT_EQ(flat.old_log_probs.size(), 300u);
  EXPECT_EQ(flat.old_log_probs[100], buf.log_probs[1][0]);
}

TEST(PpoTrain, ZeroBudgetAndDeterminism) {
  auto env = make_env({.id = "double_integrator"});
  PpoConfig cfg = rollout_config(2, SampleInterval(4));
  cfg.steps_per_rollout = 64;
  cfg.epochs = 2;
  cfg.minibatch_size = 32;
  SeedStreams z = seed_streams(1);
  EXPECT_TRUE(ppo_train(cfg, TrainSettings{.total_steps = 0}, *env, z).log.empty());
  SeedStreams a = seed_streams(2), b = seed_streams(2);
  const TrainSettings settings{.total_steps = 501, .eval_interval = 200, .eval_episodes = 2};
  const PpoTrainResult ra = ppo_train(cfg, settings, *env, a);
  const PpoTrainResult rb = ppo_train(cfg, settings, *env, b);
  EXPECT_EQ(ra.log.rows(), rb.log.rows());
  EXPECT_EQ(ra.agent, rb.agent);
  EXPECT_FALSE(ra.error.has_value());
  // Three 64-step rollouts across two workers, then a 58-step tail floored to
  // 500. Each rollout gives four minibatches per epoch.
  EXPECT_EQ(ra.steps, 500u);
  EXPECT_EQ(ra.log.rows().back().timestep, 500u);
  EXPECT_TRUE(ra.log.rows().back().eval.has_value());
  EXPECT_EQ(ra.updates, 32u);
}

TEST(Checkpoint, SacRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "gsde_ckpt_test";
  std::filesystem::create_directories(dir);
  Rng rng(17);
  SacConfig cfg;
  cfg.hidden = {8};
  SacAgent agent(3, 1, cfg, rng);
  agent.gsde->resample(rng);
  agent.log_alpha = -0.37;
  SeedStreams streams = seed_streams(4);
  streams.noise.normal();
  save_checkpoint(dir / "sac.bin", agent, streams);
  EXPECT_EQ(checkpoint_kind(dir / "sac.bin"), CheckpointKind::kSac);
  Rng other(99);
  SacAgent loaded(3, 1, cfg, other);
  SeedStreams ls = seed_streams(0);
  load_checkpoint(dir / "sac.bin", loaded, ls);
  EXPECT_EQ(loaded, agent);
  EXPECT_EQ(ls, streams);
  PpoConfig pc;
  pc.hidden = {8};
  PpoAgent ppo(3, 1, pc, other);
  EXPECT_THROW(load_checkpoint(dir / "sac.bin", ppo, ls), std::runtime_error);
  std::filesystem::remove_all(dir);
}

TEST(Checkpoint, PpoRoundTripAndCorruption) {
  const auto dir = std::filesystem::temp_directory_path() / "gsde_ckpt_test_ppo";
  std::filesystem::create_directories(dir);
  Rng rng(18);
  PpoConfig cfg;
  cfg.hidden = {8};
  PpoAgent agent(3, 1, cfg, rng);
  agent.normalizer.obs_stats.update(std::vector<double>{1, 2, 3, 4, 5, 6}, 2);
  const PpoBatch b = random_batch(agent, rng, 8, 0.2);
  ppo_update_minibatch(agent, b);
  const SeedStreams streams = seed_streams(5);
  save_checkpoint(dir / "ppo.bin", agent, streams);
  Rng other(1);
  PpoAgent loaded(3, 1, cfg, other);
  SeedStreams ls = seed_streams(0);
  load_checkpoint(dir / "ppo.bin", loaded, ls);
  EXPECT_EQ(loaded, agent);
  EXPECT_EQ(ls, streams);

  std::ofstream(dir / "ppo.bin", std::ios::app | std::ios::binary) << 'x';
  EXPECT_THROW(load_checkpoint(dir / "ppo.bin", loaded, ls), std::runtime_error);
  std::ofstream(dir / "bad.bin", std::ios::binary) << "NOTACKPT";
  EXPECT_THROW(checkpoint_kind(dir / "bad.bin"), std::runtime_error);
  PpoConfig wider = cfg;
  wider.hidden = {9};
  save_checkpoint(dir / "ppo.bin", agent, streams);
  PpoAgent mismatched(3, 1, wider, other);
  EXPECT_THROW(load_checkpoint(dir / "ppo.bin", mismatched, ls), std::runtime_error);
  std::filesystem::remove_all(dir);
}
