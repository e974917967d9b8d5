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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gsde/algos/noise_type.hpp"
#include "gsde/algos/replay_buffer.hpp"
#include "gsde/distributions/gsde.hpp"
#include "gsde/metrics/policy.hpp"
#include "gsde/nn/adam.hpp"
#include "gsde/nn/mlp.hpp"

namespace gsde {

struct SacConfig {
  std::vector<std::size_t> hidden{64, 64};
  double learning_rate = 7.3e-4;
  double gamma = 0.98;
  std::size_t buffer_size = 300000;
  std::size_t batch_size = 256;
  double tau = 0.02;
  std::size_t warmup_steps = 10000;
  std::optional<double> target_entropy;  // -action_dim when unset
  double initial_alpha = 1.0;

  NoiseType noise = NoiseType::kGsde;
  SampleInterval gsde_interval{8};
  VarianceTransform variance_transform = VarianceTransform::kExp;
  double log_sigma_init = -3.0;
  double mean_clip = 2.0;  // gSDE mean is clipped to [-mean_clip, mean_clip]
  double ou_sigma = 0.2;
  double param_noise_sigma = 0.2;

  bool operator==(const SacConfig&) const = default;
};

/// Soft actor-critic state. With gSDE the actor outputs the action mean and
/// `gsde` holds the learnable log-sigma matrix plus the current noise matrix;
/// otherwise the actor outputs [mean | log_std] of a diagonal Gaussian.
struct SacAgent : Policy {
  SacAgent(std::size_t obs_dim, std::size_t action_dim, SacConfig config, Rng& init_rng);

  std::vector<double> deterministic_action(std::span<const double> observation) const override;

  bool uses_gsde() const noexcept { return gsde.has_value(); }
  std::size_t obs_dim() const noexcept { return actor.input_dim(); }
  std::size_t action_dim() const noexcept { return action_dim_; }
  double alpha() const;

  /// Actor weights followed by log-sigma (gSDE only).
  std::vector<std::span<double>> actor_parameters();
  std::vector<std::span<const double>> actor_parameters() const;
  std::vector<std::span<double>> critic_parameters();
  std::vector<std::span<const double>> critic_parameters() const;
  std::vector<std::span<double>> target_parameters();
  bool all_finite() const;

  bool operator==(const SacAgent& other) const;

  SacConfig config;
  Mlp actor;
  std::optional<GsdeDistribution> gsde;
  Mlp q1, q2, q1_target, q2_target;
  double log_alpha = 0.0;
  double target_entropy = 0.0;
  AdamState actor_optimizer;
  AdamState critic_optimizer;
  AdamState alpha_optimizer;

 private:
  std::size_t action_dim_;
};

/// Standard-normal draws used by one gradient step. For gSDE, `gsde_xi`
/// (latent x action) scales into the shared noise matrix theta = sigma * xi;
/// for the diagonal Gaussian actor, per-sample draws for s and s'.
struct SacNoiseDraw {
  Matrix gsde_xi;
  Matrix current_xi;
  Matrix next_xi;
};

SacNoiseDraw draw_sac_noise(const SacAgent& agent, std::size_t batch_size, Rng& rng);

/// Stochastic actor evaluated on a batch, with everything the reverse pass needs.
struct ActorSample {
  ForwardPass pass;
  Matrix mean;          // batch x action, after clipping
  Matrix mean_pass;     // 1 where the mean gradient passes the clip
  Matrix log_std_pass;  // diagonal Gaussian only: 1 where log_std is not clamped
  Matrix stddev;        // per-sample policy std (floored)
  Matrix std_floored;   // 1 where the floor is active
  Matrix eps;           // pre-squash action minus mean
  Matrix gsde_xi;       // gSDE only: the standard-normal draw behind theta
  Matrix pre_squash;
  Matrix action;        // tanh(pre_squash)
  std::vector<double> log_prob;
};

ActorSample sample_actor(const SacAgent& agent, const Matrix& observations, const SacNoiseDraw& noise, bool next);

/// y = r + gamma (1 - done) (min(q1', q2') - alpha logpi').
double sac_critic_target(double reward, double done, double q1_next, double q2_next, double log_prob_next,
                         double alpha, double gamma);

struct SacLosses {
  double critic = 0.0;  // 0.5 * (MSE(q1, y) + MSE(q2, y))
  double actor = 0.0;   // mean(alpha logpi - min(q1, q2)) at reparameterised actions
  double alpha = 0.0;   // mean(-log_alpha (logpi + target_entropy)), logpi detached
  double mean_log_prob = 0.0;
  std::size_t floored_std = 0;
};

/// Losses at the current parameters for a fixed noise draw.
SacLosses sac_losses(const SacAgent& agent, const ReplayBatch& batch, const SacNoiseDraw& noise);

/// Gradient of the actor loss w.r.t. actor_parameters() (same layout), with
/// the critics held fixed.
std::vector<std::vector<double>> sac_actor_gradient(const SacAgent& agent, const ActorSample& sample);
/// Gradient of the critic loss w.r.t. critic_parameters().
std::vector<std::vector<double>> sac_critic_gradient(const SacAgent& agent, const ReplayBatch& batch,
                                                     std::span<const double> targets);
/// d(alpha loss) / d(log_alpha).
double sac_alpha_gradient(const SacAgent& agent, std::span<const double> log_probs);

/// One full update: fresh noise draw (the gSDE noise matrix is resampled),
/// temperature step, critic step, actor step (against the updated critics),
/// target smoothing. Throws NonFiniteError without touching parameters if a
/// loss is not finite.
SacLosses sac_gradient_step(SacAgent& agent, const ReplayBatch& batch, Rng& rng);

}  // namespace gsde
