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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gsde/algos/ppo.hpp"
#include "gsde/algos/training_log.hpp"
#include "gsde/envs/env.hpp"
#include "gsde/metrics/continuity.hpp"
#include "gsde/seeding.hpp"

namespace gsde {

/// Persistent state of one collection worker: its env copy, its own random
/// streams and noise matrix, and the episode in progress.
struct PpoWorker {
  std::unique_ptr<Env> env;
  Rng env_rng;
  Rng noise_rng;
  std::optional<GsdeDistribution> gsde;
  std::vector<double> observation;  // raw, not normalised
  double episode_return = 0.0;
  double discounted_return = 0.0;   // running return for reward scaling
  Trajectory actions;
  bool needs_reset = true;
};

std::vector<PpoWorker> make_ppo_workers(const PpoAgent& agent, const Env& prototype, std::uint64_t master);

struct EpisodeRecord {
  std::size_t timestep = 0;
  double episode_return = 0.0;
  std::optional<double> continuity;

  bool operator==(const EpisodeRecord&) const = default;
};

/// Fixed-length per-worker storage for one rollout.
struct RolloutBuffer {
  std::size_t workers = 0;
  std::size_t steps = 0;
  // Indexed [worker][step]; observations are normalised.
  std::vector<Matrix> observations;
  std::vector<Matrix> actions;
  std::vector<std::vector<double>> log_probs;
  std::vector<std::vector<double>> values;
  std::vector<std::vector<double>> rewards;  // normalised, timeout bootstrap included
  std::vector<std::vector<double>> dones;
  std::vector<double> last_values;
  /// Noise matrix each worker started the rollout with, and how many times
  /// each worker drew a fresh one.
  std::vector<Matrix> initial_theta;
  std::vector<std::size_t> resamples;
  /// Raw observations and running returns seen, for the normaliser update.
  std::vector<std::vector<double>> raw_observations;
  std::vector<std::vector<double>> raw_returns;
  std::vector<EpisodeRecord> episodes;  // sorted by timestep

  bool operator==(const RolloutBuffer&) const = default;
};

/// Collects `steps` transitions from every worker against the current agent
/// (read only). Worker w's k-th step is logged at base + k * W + w + 1.
RolloutBuffer collect_rollout(const PpoAgent& agent, std::vector<PpoWorker>& workers, std::size_t steps,
                              std::size_t base_timestep, bool parallel);

/// GAE per worker, flattened in worker-major order.
PpoBatch flatten_rollout(const RolloutBuffer& buffer, double gamma, double lambda);

struct PpoTrainResult {
  PpoAgent agent;
  TrainingLog log;
  std::size_t steps = 0;
  std::size_t updates = 0;
  std::optional<std::string> error;
};

/// Rollout / update loop. Each rollout takes min(steps_per_rollout,
/// remaining / workers) steps per worker; training stops when that is zero.
PpoTrainResult ppo_train(const PpoConfig& config, const TrainSettings& settings, const Env& env, SeedStreams& streams);

}  // namespace gsde
