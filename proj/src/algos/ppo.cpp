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

#include "gsde/algos/ppo.hpp"

#include <algorithm>
#include <cmath>

#include "gsde/error.hpp"

namespace gsde {
namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;

std::vector<std::span<const double>> views(const std::vector<std::vector<double>>& grads) {
  return {grads.begin(), grads.end()};
}

bool finite(std::span<const std::span<const double>> spans) {
  for (auto s : spans)
    for (double v : s)
      if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace

Activation PpoConfig::resolved_activation() const {
  if (activation) return *activation;
  return noise == NoiseType::kGsde ? Activation::kReLU : Activation::kTanh;
}

double PpoConfig::resolved_log_sigma_init() const {
  if (log_sigma_init) return *log_sigma_init;
  return noise == NoiseType::kGsde ? -2.0 : 0.0;
}

PpoAgent::PpoAgent(std::size_t obs_dim, std::size_t action_dim, PpoConfig cfg, Rng& init_rng)
    : config(std::move(cfg)), normalizer(obs_dim, config.gamma) {
  if (obs_dim == 0 || action_dim == 0) throw ShapeError("PpoAgent: empty observation or action space");
  if (config.noise != NoiseType::kGsde && config.noise != NoiseType::kGaussian)
    throw std::invalid_argument("ppo supports gsde and gaussian noise only, got " + to_string(config.noise));
  if (config.workers == 0) throw std::invalid_argument("ppo needs at least one worker");
  const Activation act = config.resolved_activation();
  policy = Mlp(obs_dim, config.hidden, action_dim, act, init_rng);
  value = Mlp(obs_dim, config.hidden, 1, act, init_rng);
  if (uses_gsde()) log_sigma = Matrix(policy.latent_dim(), action_dim, config.resolved_log_sigma_init());
  else log_std.assign(action_dim, config.resolved_log_sigma_init());
  optimizer = make_adam_state(parameters(), AdamConfig{.learning_rate = config.learning_rate});
}

std::vector<double> PpoAgent::deterministic_action(std::span<const double> observation) const {
  const std::vector<double> obs = config.normalize ? normalizer.normalize_observation(observation)
                                                   : std::vector<double>(observation.begin(), observation.end());
  const Matrix out = mlp_predict(policy, Matrix::row_vector(obs));
  std::vector<double> action(out.cols());
  for (std::size_t j = 0; j < action.size(); ++j) action[j] = std::clamp(out(0, j), -1.0, 1.0);
  return action;
}

std::vector<std::span<double>> PpoAgent::parameters() {
  auto p = policy.parameters();
  auto v = value.parameters();
  p.insert(p.end(), v.begin(), v.end());
  if (uses_gsde()) p.push_back(log_sigma.data());
  else p.emplace_back(log_std);
  return p;
}

std::vector<std::span<const double>> PpoAgent::parameters() const {
  auto p = policy.parameters();
  auto v = value.parameters();
  p.insert(p.end(), v.begin(), v.end());
  if (uses_gsde()) p.push_back(log_sigma.data());
  else p.emplace_back(log_std);
  return p;
}

bool PpoAgent::all_finite() const { return finite(parameters()); }

bool PpoAgent::operator==(const PpoAgent& other) const {
  return policy == other.policy && value == other.value && log_sigma == other.log_sigma &&
         log_std == other.log_std && normalizer == other.normalizer && optimizer == other.optimizer;
}

std::vector<double> normalize_advantages(std::span<const double> advantages) {
  const std::size_t n = advantages.size();
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  double mean = 0.0;
  for (double a : advantages) mean += a;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double a : advantages) ss += (a - mean) * (a - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  for (std::size_t i = 0; i < n; ++i) out[i] = (advantages[i] - mean) / (sd + 1e-8);
  return out;
}

PpoEvaluation ppo_evaluate(const PpoAgent& agent, const Matrix& observations, const Matrix& actions) {
  const std::size_t batch = observations.rows();
  const std::size_t a = agent.action_dim();
  if (actions.rows() != batch || actions.cols() != a) throw ShapeError("ppo_evaluate: action batch shape");
  PpoEvaluation ev{mlp_forward(agent.policy, observations)};
  if (agent.uses_gsde()) {
    ev.stddev = gsde_std_batch(sigma_matrix(agent.log_sigma, agent.config.variance_transform), ev.pass.latent());
  } else {
    ev.stddev = Matrix(batch, a);
    for (std::size_t b = 0; b < batch; ++b)
      for (std::size_t j = 0; j < a; ++j) ev.stddev(b, j) = std::exp(std::clamp(agent.log_std[j], kLogStdMin, kLogStdMax));
  }
  ev.std_floored = Matrix(batch, a, 0.0);
  ev.log_probs.assign(batch, 0.0);
  ev.entropies.assign(batch, 0.0);
  const Matrix& mean = ev.pass.output();
  for (std::size_t b = 0; b < batch; ++b) {
    for (std::size_t j = 0; j < a; ++j) {
      double& sd = ev.stddev(b, j);
      if (sd < kMinStd) {
        sd = kMinStd;
        ev.std_floored(b, j) = 1.0;
      }
      const double z = (actions(b, j) - mean(b, j)) / sd;
      ev.log_probs[b] += -0.5 * z * z - std::log(sd) - kHalfLog2Pi;
      ev.entropies[b] += 0.5 + kHalfLog2Pi + std::log(sd);
    }
  }
  return ev;
}

namespace {

struct LossParts {
  PpoLoss loss;
  std::vector<double> d_log_prob;  // dL/dlogpi_new per sample
};

LossParts loss_parts(const PpoAgent& agent, const PpoBatch& batch, const PpoEvaluation& ev, const Matrix& values) {
  const std::size_t n = batch.old_log_probs.size();
  if (n == 0) throw ShapeError("ppo_loss: empty batch");
  if (batch.advantages.size() != n || batch.returns.size() != n || batch.observations.rows() != n)
    throw ShapeError("ppo_loss: inconsistent batch");
  const std::vector<double> adv = normalize_advantages(batch.advantages);
  const double c = agent.config.clip_range;
  const double inv_n = 1.0 / static_cast<double>(n);
  LossParts out;
  out.d_log_prob.assign(n, 0.0);
  double surrogate = 0.0, vloss = 0.0, ent = 0.0, clipped = 0.0, kl = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double log_ratio = ev.log_probs[i] - batch.old_log_probs[i];
    const double ratio = std::exp(log_ratio);
    if (!std::isfinite(ratio)) throw NonFiniteError("ppo_loss: non-finite importance ratio");
    const double unclipped = ratio * adv[i];
    const double clipped_obj = std::clamp(ratio, 1.0 - c, 1.0 + c) * adv[i];
    surrogate += std::min(unclipped, clipped_obj);
    if (unclipped <= clipped_obj) out.d_log_prob[i] = -inv_n * adv[i] * ratio;
    if (std::abs(ratio - 1.0) > c) clipped += 1.0;
    kl += -log_ratio;
    const double err = values(i, 0) - batch.returns[i];
    vloss += err * err;
    ent += ev.entropies[i];
  }
  out.loss.policy = -surrogate * inv_n;
  out.loss.value = vloss * inv_n;
  out.loss.entropy = ent * inv_n;
  out.loss.total = out.loss.policy + agent.config.vf_coef * out.loss.value - agent.config.ent_coef * out.loss.entropy;
  out.loss.clip_fraction = clipped * inv_n;
  out.loss.approx_kl = kl * inv_n;
  return out;
}

}  // namespace

PpoLoss ppo_loss(const PpoAgent& agent, const PpoBatch& batch) {
  const PpoEvaluation ev = ppo_evaluate(agent, batch.observations, batch.actions);
  const Matrix values = mlp_predict(agent.value, batch.observations);
  return loss_parts(agent, batch, ev, values).loss;
}

std::vector<std::vector<double>> ppo_gradient(const PpoAgent& agent, const PpoBatch& batch) {
  const PpoEvaluation ev = ppo_evaluate(agent, batch.observations, batch.actions);
  const ForwardPass vpass = mlp_forward(agent.value, batch.observations);
  const LossParts parts = loss_parts(agent, batch, ev, vpass.output());
  const std::size_t n = batch.old_log_probs.size();
  const std::size_t a = agent.action_dim();
  const double inv_n = 1.0 / static_cast<double>(n);
  const double d_ent = -agent.config.ent_coef * inv_n;  // dL/d(entropy_b)

  std::vector<std::vector<double>> grads;
  Matrix d_mean(n, a), d_std(n, a);
  const Matrix& mean = ev.pass.output();
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t j = 0; j < a; ++j) {
      const double sd = ev.stddev(b, j);
      const double e = batch.actions(b, j) - mean(b, j);
      d_mean(b, j) = parts.d_log_prob[b] * e / (sd * sd);
      // dlogpi/dsd = e^2/sd^3 - 1/sd, dentropy/dsd = 1/sd
      d_std(b, j) = ev.std_floored(b, j) > 0.0
                        ? 0.0
                        : parts.d_log_prob[b] * (e * e / (sd * sd * sd) - 1.0 / sd) + d_ent / sd;
    }
  }
  const MlpGradients policy_grads = mlp_backward(agent.policy, ev.pass.tape, d_mean);
  for (auto s : policy_grads.spans()) grads.emplace_back(s.begin(), s.end());

  Matrix d_value(n, 1);
  for (std::size_t b = 0; b < n; ++b)
    d_value(b, 0) = agent.config.vf_coef * 2.0 * (vpass.output()(b, 0) - batch.returns[b]) * inv_n;
  const MlpGradients value_grads = mlp_backward(agent.value, vpass.tape, d_value);
  for (auto s : value_grads.spans()) grads.emplace_back(s.begin(), s.end());

  if (agent.uses_gsde()) {
    // The latent features are treated as constants in the noise path.
    const Matrix& z = ev.pass.latent();
    Matrix z2(z.rows(), z.cols());
    for (std::size_t i = 0; i < z.size(); ++i) z2.data()[i] = z.data()[i] * z.data()[i];
    Matrix d_over_std(n, a);
    for (std::size_t i = 0; i < d_std.size(); ++i) d_over_std.data()[i] = d_std.data()[i] / ev.stddev.data()[i];
    const Matrix acc = matmul_tn(z2, d_over_std);
    const Matrix sigma = sigma_matrix(agent.log_sigma, agent.config.variance_transform);
    std::vector<double> g(sigma.size());
    for (std::size_t k = 0; k < g.size(); ++k)
      g[k] = sigma.data()[k] * acc.data()[k] *
             variance_transform_derivative(agent.log_sigma.data()[k], agent.config.variance_transform);
    grads.push_back(std::move(g));
  } else {
    std::vector<double> g(a, 0.0);
    for (std::size_t j = 0; j < a; ++j) {
      const double ls = agent.log_std[j];
      if (ls > kLogStdMax || ls < kLogStdMin) continue;
      for (std::size_t b = 0; b < n; ++b) g[j] += d_std(b, j) * ev.stddev(b, j);
    }
    grads.push_back(std::move(g));
  }
  return grads;
}

PpoLoss ppo_update_minibatch(PpoAgent& agent, const PpoBatch& batch) {
  const PpoLoss loss = ppo_loss(agent, batch);
  if (!std::isfinite(loss.total)) throw NonFiniteError("ppo: non-finite loss");
  auto grads = ppo_gradient(agent, batch);
  if (!finite(views(grads))) throw NonFiniteError("ppo: non-finite gradient");
  std::vector<std::span<double>> mut(grads.begin(), grads.end());
  clip_grad_norm(mut, agent.config.max_grad_norm);
  adam_step(agent.parameters(), views(grads), agent.optimizer);
  return loss;
}

}  // namespace gsde
