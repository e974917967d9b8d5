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

#include "gsde/algos/sac_train.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "gsde/error.hpp"
#include "gsde/metrics/continuity.hpp"

namespace gsde {

SacExplorer::SacExplorer(const SacAgent& agent, const SacConfig& config)
    : ou(agent.action_dim(), OuConfig{.sigma = config.ou_sigma}),
      param{.stddev = config.param_noise_sigma},
      perturbed(agent.actor) {}

void SacExplorer::episode_start(SacAgent& agent, Rng& rng) {
  switch (agent.config.noise) {
    case NoiseType::kGsde:
      agent.gsde->resample(rng);
      break;
    case NoiseType::kOu:
      ou.reset();
      break;
    case NoiseType::kParam:
      perturbed = perturb_params(agent.actor, param.stddev, rng);
      break;
    default:
      break;
  }
}

std::vector<double> SacExplorer::act(SacAgent& agent, std::span<const double> obs, Rng& rng) {
  const std::size_t a = agent.action_dim();
  std::vector<double> action(a);
  switch (agent.config.noise) {
    case NoiseType::kNone:
      return agent.deterministic_action(obs);
    case NoiseType::kGsde: {
      const ForwardPass pass = mlp_forward(agent.actor, Matrix::row_vector(obs));
      std::vector<double> mean(a);
      for (std::size_t j = 0; j < a; ++j)
        mean[j] = std::clamp(pass.output()(0, j), -agent.config.mean_clip, agent.config.mean_clip);
      const auto u = agent.gsde->step(mean, pass.latent().row(0), rng);
      for (std::size_t j = 0; j < a; ++j) action[j] = std::tanh(u[j]);
      return action;
    }
    case NoiseType::kGaussian: {
      const Matrix out = mlp_predict(agent.actor, Matrix::row_vector(obs));
      for (std::size_t j = 0; j < a; ++j) {
        const double sd = std::max(std::exp(std::clamp(out(0, a + j), kLogStdMin, kLogStdMax)), kMinStd);
        action[j] = std::tanh(out(0, j) + sd * rng.normal());
      }
      return action;
    }
    case NoiseType::kOu: {
      const auto base = agent.deterministic_action(obs);
      const auto noise = ou.step(rng);
      for (std::size_t j = 0; j < a; ++j) action[j] = std::clamp(base[j] + noise[j], -1.0, 1.0);
      return action;
    }
    case NoiseType::kParam: {
      const Matrix out = mlp_predict(perturbed, Matrix::row_vector(obs));
      for (std::size_t j = 0; j < a; ++j) action[j] = std::tanh(out(0, j));
      return action;
    }
  }
  return action;
}

void SacExplorer::episode_end(const SacAgent& agent, const Matrix& episode_states) {
  if (agent.config.noise != NoiseType::kParam || episode_states.rows() == 0) return;
  adapt_param_noise(param, action_distance(agent.actor, perturbed, episode_states, agent.action_dim()));
}

SacTrainResult sac_train(const SacConfig& config, const TrainSettings& settings, Env& env, SeedStreams& streams) {
  const auto start = std::chrono::steady_clock::now();
  auto clock = [&]() -> std::optional<double> {
    if (!settings.wall_clock) return std::nullopt;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  const std::size_t obs_dim = env.observation_dim();
  const std::size_t act_dim = env.action_dim();
  SacTrainResult result{SacAgent(obs_dim, act_dim, config, streams.policy_init), TrainingLog{},
                        ReplayBuffer(std::max<std::size_t>(1, std::min(config.buffer_size, settings.total_steps)),
                                     obs_dim, act_dim),
                        0, 0, std::nullopt};
  SacAgent& agent = result.agent;
  const std::uint64_t eval_seed = streams.eval.next_u64();
  if (settings.total_steps == 0) return result;

  std::unique_ptr<Env> eval_env = env.clone();
  auto evaluate = [&](std::size_t t) {
    result.log.add_eval(t, evaluate_policy(agent, *eval_env, settings.eval_episodes, eval_seed), clock());
  };
  evaluate(0);

  SacExplorer explorer(agent, config);
  const bool uniform_warmup = config.noise != NoiseType::kNone;
  std::size_t& t = result.steps;
  std::size_t episode = 0;
  try {
    while (t < settings.total_steps) {
      std::vector<double> obs = env.reset(streams.env.next_u64());
      explorer.episode_start(agent, streams.noise);
      Trajectory traj = Trajectory::symmetric(act_dim, 1.0);
      std::vector<double> states;
      double episode_return = 0.0;
      bool done = false;
      while (!done && t < settings.total_steps) {
        std::vector<double> action;
        if (t < config.warmup_steps && uniform_warmup) {
          action.resize(act_dim);
          for (double& v : action) v = streams.noise.uniform(-1.0, 1.0);
        } else {
          action = explorer.act(agent, obs, streams.noise);
        }
        StepResult step = env.step_normalized(action);
        result.buffer.add(obs, action, step.reward, step.observation, step.terminated);
        states.insert(states.end(), obs.begin(), obs.end());
        traj.actions.push_back(std::move(action));
        episode_return += step.reward;
        obs = std::move(step.observation);
        done = step.done();
        ++t;
        if (settings.eval_interval > 0 && t % settings.eval_interval == 0 && t < settings.total_steps) evaluate(t);
      }
      const std::size_t length = traj.actions.size();
      std::optional<double> cost;
      if (length >= 2) cost = continuity_cost(traj);
      result.log.add_episode(t, episode++, episode_return, cost, clock());
      explorer.episode_end(agent, Matrix(length, obs_dim, std::move(states)));

      if (t >= config.warmup_steps) {
        for (std::size_t k = 0; k < length; ++k) {
          const ReplayBatch batch = result.buffer.sample(config.batch_size, streams.noise);
          sac_gradient_step(agent, batch, streams.noise);
          ++result.gradient_steps;
        }
      }
    }
  } catch (const NonFiniteError& e) {
    result.error = e.what();
    return result;
  }
  evaluate(settings.total_steps);
  return result;
}

}  // namespace gsde
