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

#include "gsde/algos/sac.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gsde/distributions/squash.hpp"
#include "gsde/error.hpp"

namespace gsde {
namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;

std::vector<std::span<const double>> to_const(const std::vector<std::span<double>>& spans) {
  return std::vector<std::span<const double>>(spans.begin(), spans.end());
}

Matrix critic_input(const Matrix& obs, const Matrix& actions) { return hconcat(obs, actions); }

void append_gradients(std::vector<std::vector<double>>& out, const MlpGradients& g) {
  for (auto s : g.spans()) out.emplace_back(s.begin(), s.end());
}

std::vector<std::span<const double>> views(const std::vector<std::vector<double>>& grads) {
  std::vector<std::span<const double>> out;
  out.reserve(grads.size());
  for (const auto& g : grads) out.emplace_back(g);
  return out;
}

}  // namespace

SacAgent::SacAgent(std::size_t obs_dim, std::size_t action_dim, SacConfig cfg, Rng& init_rng)
    : config(std::move(cfg)), action_dim_(action_dim) {
  if (obs_dim == 0 || action_dim == 0) throw ShapeError("SacAgent: empty observation or action space");
  const bool sde = config.noise == NoiseType::kGsde;
  actor = Mlp(obs_dim, config.hidden, sde ? action_dim : 2 * action_dim, Activation::kReLU, init_rng);
  if (sde) {
    gsde.emplace(Matrix(actor.latent_dim(), action_dim, config.log_sigma_init), config.gsde_interval,
                 config.variance_transform);
  }
  q1 = Mlp(obs_dim + action_dim, config.hidden, 1, Activation::kReLU, init_rng);
  q2 = Mlp(obs_dim + action_dim, config.hidden, 1, Activation::kReLU, init_rng);
  q1_target = q1;
  q2_target = q2;
  log_alpha = std::log(config.initial_alpha);
  target_entropy = config.target_entropy.value_or(-static_cast<double>(action_dim));
  const AdamConfig adam{.learning_rate = config.learning_rate};
  actor_optimizer = make_adam_state(actor_parameters(), adam);
  critic_optimizer = make_adam_state(critic_parameters(), adam);
  const std::vector<std::span<const double>> alpha_view{std::span<const double>(&log_alpha, 1)};
  alpha_optimizer = make_adam_state(alpha_view, adam);
}

double SacAgent::alpha() const { return std::exp(log_alpha); }

std::vector<double> SacAgent::deterministic_action(std::span<const double> observation) const {
  const Matrix out = mlp_predict(actor, Matrix::row_vector(observation));
  std::vector<double> action(action_dim_);
  for (std::size_t j = 0; j < action_dim_; ++j) {
    double m = out(0, j);
    if (gsde) m = std::clamp(m, -config.mean_clip, config.mean_clip);
    action[j] = std::tanh(m);
  }
  return action;
}

std::vector<std::span<double>> SacAgent::actor_parameters() {
  auto p = actor.parameters();
  if (gsde) p.push_back(gsde->log_sigma().data());
  return p;
}

std::vector<std::span<const double>> SacAgent::actor_parameters() const {
  auto p = actor.parameters();
  if (gsde) p.push_back(gsde->log_sigma().data());
  return p;
}

std::vector<std::span<double>> SacAgent::critic_parameters() {
  auto p = q1.parameters();
  auto p2 = q2.parameters();
  p.insert(p.end(), p2.begin(), p2.end());
  return p;
}

std::vector<std::span<const double>> SacAgent::critic_parameters() const {
  auto p = q1.parameters();
  auto p2 = q2.parameters();
  p.insert(p.end(), p2.begin(), p2.end());
  return p;
}

std::vector<std::span<double>> SacAgent::target_parameters() {
  auto p = q1_target.parameters();
  auto p2 = q2_target.parameters();
  p.insert(p.end(), p2.begin(), p2.end());
  return p;
}

bool SacAgent::all_finite() const {
  auto finite = [](const std::vector<std::span<const double>>& spans) {
    for (auto s : spans)
      for (double v : s)
        if (!std::isfinite(v)) return false;
    return true;
  };
  return finite(actor_parameters()) && finite(critic_parameters()) && std::isfinite(log_alpha);
}

bool SacAgent::operator==(const SacAgent& other) const {
  auto same_gsde = [&] {
    if (gsde.has_value() != other.gsde.has_value()) return false;
    if (!gsde) return true;
    return gsde->log_sigma() == other.gsde->log_sigma() && gsde->theta_eps() == other.gsde->theta_eps() &&
           gsde->steps_since_resample() == other.gsde->steps_since_resample();
  };
  return actor == other.actor && same_gsde() && q1 == other.q1 && q2 == other.q2 && q1_target == other.q1_target &&
         q2_target == other.q2_target && log_alpha == other.log_alpha && actor_optimizer == other.actor_optimizer &&
         critic_optimizer == other.critic_optimizer && alpha_optimizer == other.alpha_optimizer;
}

SacNoiseDraw draw_sac_noise(const SacAgent& agent, std::size_t batch_size, Rng& rng) {
  SacNoiseDraw draw;
  const std::size_t a = agent.action_dim();
  if (agent.uses_gsde()) {
    draw.gsde_xi = Matrix(agent.gsde->latent_dim(), a);
    for (double& v : draw.gsde_xi.data()) v = rng.normal();
  } else {
    draw.current_xi = Matrix(batch_size, a);
    draw.next_xi = Matrix(batch_size, a);
    for (double& v : draw.current_xi.data()) v = rng.normal();
    for (double& v : draw.next_xi.data()) v = rng.normal();
  }
  return draw;
}

ActorSample sample_actor(const SacAgent& agent, const Matrix& observations, const SacNoiseDraw& noise, bool next) {
  const std::size_t batch = observations.rows();
  const std::size_t a = agent.action_dim();
  ActorSample s{mlp_forward(agent.actor, observations)};
  const Matrix& out = s.pass.output();
  s.mean = Matrix(batch, a);
  s.mean_pass = Matrix(batch, a, 1.0);
  s.stddev = Matrix(batch, a);
  s.std_floored = Matrix(batch, a, 0.0);
  s.eps = Matrix(batch, a);

  if (agent.uses_gsde()) {
    const double clip = agent.config.mean_clip;
    for (std::size_t b = 0; b < batch; ++b) {
      for (std::size_t j = 0; j < a; ++j) {
        const double m = out(b, j);
        s.mean(b, j) = std::clamp(m, -clip, clip);
        if (m > clip || m < -clip) s.mean_pass(b, j) = 0.0;
      }
    }
    const Matrix sigma = agent.gsde->sigma();
    if (noise.gsde_xi.rows() != sigma.rows() || noise.gsde_xi.cols() != sigma.cols())
      throw ShapeError("sample_actor: gsde noise draw has the wrong shape");
    Matrix theta(sigma.rows(), sigma.cols());
    for (std::size_t i = 0; i < theta.size(); ++i) theta.data()[i] = sigma.data()[i] * noise.gsde_xi.data()[i];
    s.eps = matmul(s.pass.latent(), theta);
    s.gsde_xi = noise.gsde_xi;
    s.stddev = gsde_std_batch(sigma, s.pass.latent());
  } else {
    const Matrix& xi = next ? noise.next_xi : noise.current_xi;
    if (xi.rows() != batch || xi.cols() != a) throw ShapeError("sample_actor: gaussian noise draw has the wrong shape");
    s.log_std_pass = Matrix(batch, a, 1.0);
    for (std::size_t b = 0; b < batch; ++b) {
      for (std::size_t j = 0; j < a; ++j) {
        s.mean(b, j) = out(b, j);
        const double raw = out(b, a + j);
        if (raw > kLogStdMax || raw < kLogStdMin) s.log_std_pass(b, j) = 0.0;
        s.stddev(b, j) = std::exp(std::clamp(raw, kLogStdMin, kLogStdMax));
        s.eps(b, j) = s.stddev(b, j) * xi(b, j);
      }
    }
  }

  s.pre_squash = Matrix(batch, a);
  s.action = Matrix(batch, a);
  s.log_prob.assign(batch, 0.0);
  for (std::size_t b = 0; b < batch; ++b) {
    double lp = 0.0;
    for (std::size_t j = 0; j < a; ++j) {
      double& sd = s.stddev(b, j);
      if (sd < kMinStd) {
        sd = kMinStd;
        s.std_floored(b, j) = 1.0;
      }
      const double e = s.eps(b, j);
      const double u = s.mean(b, j) + e;
      const double act = std::tanh(u);
      s.pre_squash(b, j) = u;
      s.action(b, j) = act;
      lp += -0.5 * (e / sd) * (e / sd) - std::log(sd) - kHalfLog2Pi;
      lp -= std::log(1.0 - act * act + kSquashEpsilon);
    }
    s.log_prob[b] = lp;
  }
  return s;
}

double sac_critic_target(double reward, double done, double q1_next, double q2_next, double log_prob_next,
                         double alpha, double gamma) {
  return reward + gamma * (1.0 - done) * (std::min(q1_next, q2_next) - alpha * log_prob_next);
}

namespace {

std::vector<double> critic_targets(const SacAgent& agent, const ReplayBatch& batch, const SacNoiseDraw& noise) {
  const ActorSample next = sample_actor(agent, batch.next_observations, noise, true);
  const Matrix in = critic_input(batch.next_observations, next.action);
  const Matrix q1 = mlp_predict(agent.q1_target, in);
  const Matrix q2 = mlp_predict(agent.q2_target, in);
  const double alpha = agent.alpha();
  std::vector<double> y(batch.rewards.size());
  for (std::size_t b = 0; b < y.size(); ++b)
    y[b] = sac_critic_target(batch.rewards[b], batch.dones[b], q1(b, 0), q2(b, 0), next.log_prob[b], alpha,
                             agent.config.gamma);
  return y;
}

double critic_loss(const SacAgent& agent, const ReplayBatch& batch, std::span<const double> y) {
  const Matrix in = critic_input(batch.observations, batch.actions);
  const Matrix q1 = mlp_predict(agent.q1, in);
  const Matrix q2 = mlp_predict(agent.q2, in);
  double s1 = 0.0, s2 = 0.0;
  for (std::size_t b = 0; b < y.size(); ++b) {
    s1 += (q1(b, 0) - y[b]) * (q1(b, 0) - y[b]);
    s2 += (q2(b, 0) - y[b]) * (q2(b, 0) - y[b]);
  }
  const double n = static_cast<double>(y.size());
  return 0.5 * (s1 / n + s2 / n);
}

double actor_loss(const SacAgent& agent, const Matrix& obs, const ActorSample& sample) {
  const Matrix in = critic_input(obs, sample.action);
  const Matrix q1 = mlp_predict(agent.q1, in);
  const Matrix q2 = mlp_predict(agent.q2, in);
  const double alpha = agent.alpha();
  double total = 0.0;
  for (std::size_t b = 0; b < sample.log_prob.size(); ++b)
    total += alpha * sample.log_prob[b] - std::min(q1(b, 0), q2(b, 0));
  return total / static_cast<double>(sample.log_prob.size());
}

double mean_of(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

std::size_t count_floored(const ActorSample& s) {
  std::size_t n = 0;
  for (double f : s.std_floored.data()) n += f > 0.0 ? 1 : 0;
  return n;
}

void check_batch(const SacAgent& agent, const ReplayBatch& batch) {
  const std::size_t n = batch.rewards.size();
  if (n == 0) throw ShapeError("sac: empty batch");
  if (batch.observations.rows() != n || batch.next_observations.rows() != n || batch.actions.rows() != n ||
      batch.dones.size() != n)
    throw ShapeError("sac: inconsistent batch sizes");
  if (batch.observations.cols() != agent.obs_dim() || batch.actions.cols() != agent.action_dim())
    throw ShapeError("sac: batch does not match agent dimensions");
}

}  // namespace

SacLosses sac_losses(const SacAgent& agent, const ReplayBatch& batch, const SacNoiseDraw& noise) {
  check_batch(agent, batch);
  const ActorSample cur = sample_actor(agent, batch.observations, noise, false);
  const std::vector<double> y = critic_targets(agent, batch, noise);
  SacLosses out;
  out.mean_log_prob = mean_of(cur.log_prob);
  out.alpha = -agent.log_alpha * (out.mean_log_prob + agent.target_entropy);
  out.critic = critic_loss(agent, batch, y);
  out.actor = actor_loss(agent, batch.observations, cur);
  out.floored_std = count_floored(cur);
  return out;
}

double sac_alpha_gradient(const SacAgent& agent, std::span<const double> log_probs) {
  return -(mean_of(log_probs) + agent.target_entropy);
}

std::vector<std::vector<double>> sac_critic_gradient(const SacAgent& agent, const ReplayBatch& batch,
                                                     std::span<const double> targets) {
  const std::size_t n = targets.size();
  const Matrix in = critic_input(batch.observations, batch.actions);
  std::vector<std::vector<double>> grads;
  for (const Mlp* net : {&agent.q1, &agent.q2}) {
    const ForwardPass pass = mlp_forward(*net, in);
    Matrix d(n, 1);
    for (std::size_t b = 0; b < n; ++b) d(b, 0) = (pass.output()(b, 0) - targets[b]) / static_cast<double>(n);
    append_gradients(grads, mlp_backward(*net, pass.tape, d));
  }
  return grads;
}

std::vector<std::vector<double>> sac_actor_gradient(const SacAgent& agent, const ActorSample& sample) {
  const std::size_t batch = sample.log_prob.size();
  const std::size_t a = agent.action_dim();
  const std::size_t obs_dim = agent.obs_dim();
  const double inv_b = 1.0 / static_cast<double>(batch);
  const double d_logp = agent.alpha() * inv_b;

  // dQmin/da, the gradient routed to whichever critic is smaller (ties: q1).
  const Matrix in = critic_input(sample.pass.tape.input, sample.action);
  const ForwardPass p1 = mlp_forward(agent.q1, in);
  const ForwardPass p2 = mlp_forward(agent.q2, in);
  Matrix d1(batch, 1, 0.0), d2(batch, 1, 0.0);
  for (std::size_t b = 0; b < batch; ++b) {
    if (p1.output()(b, 0) <= p2.output()(b, 0)) d1(b, 0) = -inv_b;
    else d2(b, 0) = -inv_b;
  }
  const Matrix g1 = mlp_backward(agent.q1, p1.tape, d1).input;
  const Matrix g2 = mlp_backward(agent.q2, p2.tape, d2).input;

  Matrix g_u(batch, a);
  for (std::size_t b = 0; b < batch; ++b) {
    for (std::size_t j = 0; j < a; ++j) {
      const double act = sample.action(b, j);
      const double one_m = 1.0 - act * act;
      const double d_act = g1(b, obs_dim + j) + g2(b, obs_dim + j);
      g_u(b, j) = d_act * one_m + d_logp * 2.0 * act * one_m / (one_m + kSquashEpsilon);
    }
  }

  std::vector<std::vector<double>> grads;
  if (agent.uses_gsde()) {
    Matrix d_mean(batch, a), d_eps(batch, a), d_std_over_std(batch, a);
    for (std::size_t b = 0; b < batch; ++b) {
      for (std::size_t j = 0; j < a; ++j) {
        const double sd = sample.stddev(b, j);
        const double e = sample.eps(b, j);
        d_mean(b, j) = g_u(b, j) * sample.mean_pass(b, j);
        d_eps(b, j) = g_u(b, j) - d_logp * e / (sd * sd);
        const double d_std = sample.std_floored(b, j) > 0.0 ? 0.0 : d_logp * (e * e / (sd * sd * sd) - 1.0 / sd);
        d_std_over_std(b, j) = d_std / sd;
      }
    }
    append_gradients(grads, mlp_backward(agent.actor, sample.pass.tape, d_mean));

    const Matrix& z = sample.pass.latent();
    Matrix z2(z.rows(), z.cols());
    for (std::size_t i = 0; i < z.size(); ++i) z2.data()[i] = z.data()[i] * z.data()[i];
    const Matrix via_theta = matmul_tn(z, d_eps);
    const Matrix via_std = matmul_tn(z2, d_std_over_std);
    const Matrix& log_sigma = agent.gsde->log_sigma();
    const Matrix sigma = agent.gsde->sigma();
    std::vector<double> g(log_sigma.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double d_sigma = via_theta.data()[k] * sample.gsde_xi.data()[k] + sigma.data()[k] * via_std.data()[k];
      g[k] = d_sigma * variance_transform_derivative(log_sigma.data()[k], agent.gsde->transform());
    }
    grads.push_back(std::move(g));
  } else {
    Matrix d_out(batch, 2 * a);
    for (std::size_t b = 0; b < batch; ++b) {
      for (std::size_t j = 0; j < a; ++j) {
        d_out(b, j) = g_u(b, j);
        const double pass = sample.log_std_pass(b, j) * (1.0 - sample.std_floored(b, j));
        d_out(b, a + j) = pass * (g_u(b, j) * sample.eps(b, j) - d_logp);
      }
    }
    append_gradients(grads, mlp_backward(agent.actor, sample.pass.tape, d_out));
  }
  return grads;
}

SacLosses sac_gradient_step(SacAgent& agent, const ReplayBatch& batch, Rng& rng) {
  check_batch(agent, batch);
  const SacNoiseDraw noise = draw_sac_noise(agent, batch.rewards.size(), rng);
  const ActorSample cur = sample_actor(agent, batch.observations, noise, false);

  SacLosses out;
  out.mean_log_prob = mean_of(cur.log_prob);
  out.alpha = -agent.log_alpha * (out.mean_log_prob + agent.target_entropy);
  out.floored_std = count_floored(cur);
  const double alpha_grad = sac_alpha_gradient(agent, cur.log_prob);

  // Targets and the actor loss use the temperature from before this step.
  const std::vector<double> y = critic_targets(agent, batch, noise);
  out.critic = critic_loss(agent, batch, y);
  if (!std::isfinite(out.critic) || !std::isfinite(out.alpha))
    throw NonFiniteError("sac: non-finite critic or temperature loss");
  const auto critic_grads = sac_critic_gradient(agent, batch, y);

  // Work on copies so a failure further down leaves the agent untouched.
  Mlp q1 = agent.q1, q2 = agent.q2;
  AdamState critic_opt = agent.critic_optimizer;
  {
    auto p = q1.parameters();
    auto p2 = q2.parameters();
    p.insert(p.end(), p2.begin(), p2.end());
    adam_step(p, views(critic_grads), critic_opt);
  }
  std::swap(q1, agent.q1);
  std::swap(q2, agent.q2);
  std::vector<std::vector<double>> actor_grads;
  try {
    out.actor = actor_loss(agent, batch.observations, cur);
    if (!std::isfinite(out.actor)) throw NonFiniteError("sac: non-finite actor loss");
    actor_grads = sac_actor_gradient(agent, cur);
    for (const auto& g : actor_grads)
      for (double v : g)
        if (!std::isfinite(v)) throw NonFiniteError("sac: non-finite actor gradient");
  } catch (...) {
    std::swap(q1, agent.q1);
    std::swap(q2, agent.q2);
    throw;
  }
  agent.critic_optimizer = std::move(critic_opt);

  adam_step(agent.actor_parameters(), views(actor_grads), agent.actor_optimizer);
  const std::vector<std::span<double>> alpha_param{std::span<double>(&agent.log_alpha, 1)};
  const std::vector<std::span<const double>> alpha_grad_view{std::span<const double>(&alpha_grad, 1)};
  adam_step(alpha_param, alpha_grad_view, agent.alpha_optimizer);
  soft_update(to_const(agent.critic_parameters()), agent.target_parameters(), agent.config.tau);
  return out;
}

}  // namespace gsde
