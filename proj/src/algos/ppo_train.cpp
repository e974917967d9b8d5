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

#include "gsde/algos/ppo_train.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <thread>

#include "gsde/algos/gae.hpp"
#include "gsde/error.hpp"

namespace gsde {
namespace {

struct WorkerOutput {
  Matrix observations, actions;
  std::vector<double> log_probs, values, rewards, dones;
  double last_value = 0.0;
  Matrix initial_theta;
  std::size_t resamples = 0;
  std::vector<double> raw_observations, raw_returns;
  std::vector<EpisodeRecord> episodes;
};

std::vector<double> policy_input(const PpoAgent& agent, std::span<const double> raw) {
  if (agent.config.normalize) return agent.normalizer.normalize_observation(raw);
  return {raw.begin(), raw.end()};
}

double state_value(const PpoAgent& agent, std::span<const double> normalized) {
  return mlp_predict(agent.value, Matrix::row_vector(normalized))(0, 0);
}

WorkerOutput run_worker(const PpoAgent& agent, PpoWorker& worker, std::size_t index, std::size_t worker_count,
                        std::size_t steps, std::size_t base_timestep) {
  const std::size_t obs_dim = agent.obs_dim();
  const std::size_t a = agent.action_dim();
  const double gamma = agent.config.gamma;
  WorkerOutput out;
  out.observations = Matrix(steps, obs_dim);
  out.actions = Matrix(steps, a);

  const bool episodic = agent.uses_gsde() && worker.gsde->interval().is_episodic();
  if (agent.uses_gsde()) {
    worker.gsde->log_sigma() = agent.log_sigma;
    if (!episodic) {
      worker.gsde->resample(worker.noise_rng);
      ++out.resamples;
    }
  }

  for (std::size_t k = 0; k < steps; ++k) {
    if (worker.needs_reset) {
      worker.observation = worker.env->reset(worker.env_rng.next_u64());
      worker.episode_return = 0.0;
      worker.discounted_return = 0.0;
      worker.actions.actions.clear();
      worker.needs_reset = false;
      if (episodic) {
        worker.gsde->resample(worker.noise_rng);
        ++out.resamples;
      }
    }
    const std::vector<double> obs = policy_input(agent, worker.observation);
    const ForwardPass pass = mlp_forward(agent.policy, Matrix::row_vector(obs));
    const auto mean = pass.output().row(0);
    std::vector<double> u, stddev;
    if (agent.uses_gsde()) {
      if (worker.gsde->resample_due()) ++out.resamples;
      u = worker.gsde->step(mean, pass.latent().row(0), worker.noise_rng);
      stddev = worker.gsde->stddev(pass.latent().row(0));
    } else {
      u.resize(a);
      stddev.resize(a);
      for (std::size_t j = 0; j < a; ++j) {
        stddev[j] = std::exp(std::clamp(agent.log_std[j], kLogStdMin, kLogStdMax));
        u[j] = mean[j] + stddev[j] * worker.noise_rng.normal();
      }
    }
    if (k == 0 && agent.uses_gsde()) out.initial_theta = worker.gsde->theta_eps();
    out.log_probs.push_back(gaussian_log_prob(u, mean, stddev).value);
    out.values.push_back(state_value(agent, obs));
    std::copy(obs.begin(), obs.end(), out.observations.row(k).begin());
    std::copy(u.begin(), u.end(), out.actions.row(k).begin());

    std::vector<double> applied = clip_action(u, 1.0);
    StepResult step = worker.env->step_normalized(applied);
    out.raw_observations.insert(out.raw_observations.end(), worker.observation.begin(), worker.observation.end());
    worker.discounted_return = worker.discounted_return * gamma + step.reward;
    out.raw_returns.push_back(worker.discounted_return);

    double reward = agent.config.normalize ? agent.normalizer.normalize_reward(step.reward) : step.reward;
    if (step.truncated && !step.terminated)
      reward += gamma * state_value(agent, policy_input(agent, step.observation));
    out.rewards.push_back(reward);
    out.dones.push_back(step.done() ? 1.0 : 0.0);

    worker.episode_return += step.reward;
    worker.actions.actions.push_back(std::move(applied));
    if (step.done()) {
      EpisodeRecord rec{base_timestep + k * worker_count + index + 1, worker.episode_return, std::nullopt};
      if (worker.actions.actions.size() >= 2) rec.continuity = continuity_cost(worker.actions);
      out.episodes.push_back(rec);
      worker.needs_reset = true;
    }
    worker.observation = std::move(step.observation);
  }
  out.last_value = state_value(agent, policy_input(agent, worker.observation));
  return out;
}

}  // namespace

std::vector<PpoWorker> make_ppo_workers(const PpoAgent& agent, const Env& prototype, std::uint64_t master) {
  std::vector<PpoWorker> workers;
  workers.reserve(agent.config.workers);
  for (std::size_t w = 0; w < agent.config.workers; ++w) {
    const std::string id = std::to_string(w);
    PpoWorker worker{prototype.clone(), named_stream(master, "env/worker/" + id),
                     named_stream(master, "noise/worker/" + id)};
    if (agent.uses_gsde())
      worker.gsde.emplace(agent.log_sigma, agent.config.gsde_interval, agent.config.variance_transform);
    worker.actions = Trajectory::symmetric(agent.action_dim(), 1.0);
    workers.push_back(std::move(worker));
  }
  return workers;
}

RolloutBuffer collect_rollout(const PpoAgent& agent, std::vector<PpoWorker>& workers, std::size_t steps,
                              std::size_t base_timestep, bool parallel) {
  const std::size_t count = workers.size();
  if (count == 0) throw std::invalid_argument("collect_rollout: no workers");
  std::vector<WorkerOutput> outputs(count);
  if (parallel && count > 1) {
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> threads;
    threads.reserve(count);
    for (std::size_t w = 0; w < count; ++w) {
      threads.emplace_back([&, w] {
        try {
          outputs[w] = run_worker(agent, workers[w], w, count, steps, base_timestep);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : threads) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  } else {
    for (std::size_t w = 0; w < count; ++w) outputs[w] = run_worker(agent, workers[w], w, count, steps, base_timestep);
  }

  RolloutBuffer buf;
  buf.workers = count;
  buf.steps = steps;
  for (auto& o : outputs) {
    buf.observations.push_back(std::move(o.observations));
    buf.actions.push_back(std::move(o.actions));
    buf.log_probs.push_back(std::move(o.log_probs));
    buf.values.push_back(std::move(o.values));
    buf.rewards.push_back(std::move(o.rewards));
    buf.dones.push_back(std::move(o.dones));
    buf.last_values.push_back(o.last_value);
    buf.initial_theta.push_back(std::move(o.initial_theta));
    buf.resamples.push_back(o.resamples);
    buf.raw_observations.push_back(std::move(o.raw_observations));
    buf.raw_returns.push_back(std::move(o.raw_returns));
    buf.episodes.insert(buf.episodes.end(), o.episodes.begin(), o.episodes.end());
  }
  std::sort(buf.episodes.begin(), buf.episodes.end(),
            [](const EpisodeRecord& x, const EpisodeRecord& y) { return x.timestep < y.timestep; });
  return buf;
}

PpoBatch flatten_rollout(const RolloutBuffer& buffer, double gamma, double lambda) {
  PpoBatch batch;
  const std::size_t total = buffer.workers * buffer.steps;
  if (total == 0) return batch;
  const std::size_t obs_dim = buffer.observations.front().cols();
  const std::size_t a = buffer.actions.front().cols();
  batch.observations = Matrix(total, obs_dim);
  batch.actions = Matrix(total, a);
  for (std::size_t w = 0; w < buffer.workers; ++w) {
    const GaeResult gae =
        gae_compute(buffer.rewards[w], buffer.values[w], buffer.dones[w], buffer.last_values[w], gamma, lambda);
    const auto obs = buffer.observations[w].data();
    const auto act = buffer.actions[w].data();
    std::copy(obs.begin(), obs.end(), batch.observations.data().begin() + static_cast<std::ptrdiff_t>(w * buffer.steps * obs_dim));
    std::copy(act.begin(), act.end(), batch.actions.data().begin() + static_cast<std::ptrdiff_t>(w * buffer.steps * a));
    batch.old_log_probs.insert(batch.old_log_probs.end(), buffer.log_probs[w].begin(), buffer.log_probs[w].end());
    batch.advantages.insert(batch.advantages.end(), gae.advantages.begin(), gae.advantages.end());
    batch.returns.insert(batch.returns.end(), gae.returns.begin(), gae.returns.end());
  }
  return batch;
}

namespace {

PpoBatch select(const PpoBatch& all, std::span<const std::size_t> idx) {
  PpoBatch b;
  b.observations = Matrix(idx.size(), all.observations.cols());
  b.actions = Matrix(idx.size(), all.actions.cols());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto o = all.observations.row(idx[i]);
    const auto act = all.actions.row(idx[i]);
    std::copy(o.begin(), o.end(), b.observations.row(i).begin());
    std::copy(act.begin(), act.end(), b.actions.row(i).begin());
    b.old_log_probs.push_back(all.old_log_probs[idx[i]]);
    b.advantages.push_back(all.advantages[idx[i]]);
    b.returns.push_back(all.returns[idx[i]]);
  }
  return b;
}

}  // namespace

PpoTrainResult ppo_train(const PpoConfig& config, const TrainSettings& settings, const Env& env, SeedStreams& streams) {
  const auto start = std::chrono::steady_clock::now();
  auto clock = [&]() -> std::optional<double> {
    if (!settings.wall_clock) return std::nullopt;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  PpoTrainResult result{PpoAgent(env.observation_dim(), env.action_dim(), config, streams.policy_init)};
  PpoAgent& agent = result.agent;
  const std::uint64_t eval_seed = streams.eval.next_u64();
  if (settings.total_steps == 0) return result;

  std::unique_ptr<Env> eval_env = env.clone();
  auto evaluate = [&](std::size_t t) {
    result.log.add_eval(t, evaluate_policy(agent, *eval_env, settings.eval_episodes, eval_seed), clock());
  };
  evaluate(0);

  std::vector<PpoWorker> workers = make_ppo_workers(agent, env, streams.master);
  const std::size_t w_count = workers.size();
  std::size_t& t = result.steps;
  std::size_t episode = 0;
  std::size_t next_eval = settings.eval_interval;
  std::vector<std::size_t> order;
  try {
    while (true) {
      const std::size_t steps = std::min(config.steps_per_rollout, (settings.total_steps - t) / w_count);
      if (steps == 0) break;
      const RolloutBuffer buf = collect_rollout(agent, workers, steps, t, config.parallel);
      for (const auto& ep : buf.episodes)
        result.log.add_episode(ep.timestep, episode++, ep.episode_return, ep.continuity, clock());
      t += steps * w_count;

      if (config.normalize) {
        for (std::size_t w = 0; w < w_count; ++w) {
          agent.normalizer.obs_stats.update(buf.raw_observations[w], steps);
          agent.normalizer.return_stats.update(buf.raw_returns[w], steps);
        }
      }

      const PpoBatch all = flatten_rollout(buf, config.gamma, config.gae_lambda);
      const std::size_t n = all.old_log_probs.size();
      const std::size_t mb = std::max<std::size_t>(1, std::min(config.minibatch_size, n));
      order.resize(n);
      for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[streams.noise.uniform_index(i)]);
        for (std::size_t first = 0; first < n; first += mb) {
          const std::size_t len = std::min(mb, n - first);
          ppo_update_minibatch(agent, select(all, std::span<const std::size_t>(order).subspan(first, len)));
          ++result.updates;
        }
      }

      if (settings.eval_interval > 0 && t >= next_eval && t < settings.total_steps) {
        evaluate(t);
        while (next_eval <= t) next_eval += settings.eval_interval;
      }
    }
  } catch (const NonFiniteError& e) {
    result.error = e.what();
    return result;
  }
  evaluate(t);
  return result;
}

}  // namespace gsde
