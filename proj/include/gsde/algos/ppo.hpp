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
#include "gsde/algos/normalizer.hpp"
#include "gsde/distributions/gsde.hpp"
#include "gsde/metrics/policy.hpp"
#include "gsde/nn/adam.hpp"
#include "gsde/nn/mlp.hpp"

namespace gsde {

struct PpoConfig {
  std::vector<std::size_t> hidden{64, 64};
  std::optional<Activation> activation;  // ReLU for gSDE, Tanh for Gaussian when unset
  double learning_rate = 3e-5;
  double gamma = 0.99;
  std::size_t workers = 16;
  std::size_t steps_per_rollout = 512;
  std::size_t epochs = 20;
  std::size_t minibatch_size = 128;
  double gae_lambda = 0.9;
  double clip_range = 0.4;
  double vf_coef = 0.5;
  double ent_coef = 0.0;
  double max_grad_norm = 0.5;
  bool normalize = true;
  bool parallel = true;

  NoiseType noise = NoiseType::kGsde;  // kGsde or kGaussian
  SampleInterval gsde_interval{4};
  VarianceTransform variance_transform = VarianceTransform::kExp;
  std::optional<double> log_sigma_init;  // -2 for gSDE, 0 for Gaussian when unset

  Activation resolved_activation() const;
  double resolved_log_sigma_init() const;
  bool operator==(const PpoConfig&) const = default;
};

/// Actor (mean), critic (value), and the exploration scale: a log-sigma
/// matrix for gSDE or a state-independent log-std vector for Gaussian noise.
struct PpoAgent : Policy {
  PpoAgent(std::size_t obs_dim, std::size_t action_dim, PpoConfig config, Rng& init_rng);

  /// clip(mu(normalised obs), -1, 1).
  std::vector<double> deterministic_action(std::span<const double> observation) const override;

  bool uses_gsde() const noexcept { return config.noise == NoiseType::kGsde; }
  std::size_t obs_dim() const noexcept { return policy.input_dim(); }
  std::size_t action_dim() const noexcept { return policy.output_dim(); }

  /// Policy weights, value weights, exploration parameters.
  std::vector<std::span<double>> parameters();
  std::vector<std::span<const double>> parameters() const;
  bool all_finite() const;
  bool operator==(const PpoAgent& other) const;

  PpoConfig config;
  Mlp policy;
  Mlp value;
  Matrix log_sigma;              // gSDE: latent x action
  std::vector<double> log_std;   // Gaussian: action
  VecNormalize normalizer;
  AdamState optimizer;
};

/// One flattened minibatch of rollout data.
struct PpoBatch {
  Matrix observations;  // already normalised
  Matrix actions;       // unclipped policy samples
  std::vector<double> old_log_probs;
  std::vector<double> advantages;  // raw; normalised inside ppo_loss
  std::vector<double> returns;
};

struct PpoLoss {
  double policy = 0.0;
  double value = 0.0;
  double entropy = 0.0;
  double total = 0.0;  // policy + vf_coef * value - ent_coef * entropy
  double clip_fraction = 0.0;
  double approx_kl = 0.0;
};

/// (mean - eps) / (std + 1e-8) with the sample std; a single element maps to 0.
std::vector<double> normalize_advantages(std::span<const double> advantages);

/// Log-probabilities of `actions` under the current policy, and the per-sample
/// action std.
struct PpoEvaluation {
  ForwardPass pass;
  Matrix stddev;
  Matrix std_floored;
  std::vector<double> log_probs;
  std::vector<double> entropies;
};
PpoEvaluation ppo_evaluate(const PpoAgent& agent, const Matrix& observations, const Matrix& actions);

PpoLoss ppo_loss(const PpoAgent& agent, const PpoBatch& batch);
/// Gradient of ppo_loss().total in the layout of PpoAgent::parameters().
std::vector<std::vector<double>> ppo_gradient(const PpoAgent& agent, const PpoBatch& batch);
/// Loss, clipped gradient, Adam step. Throws NonFiniteError before touching
/// the parameters if the loss or gradient is not finite.
PpoLoss ppo_update_minibatch(PpoAgent& agent, const PpoBatch& batch);

}  // namespace gsde
