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

#include <optional>
#include <string>

#include "gsde/algos/replay_buffer.hpp"
#include "gsde/algos/sac.hpp"
#include "gsde/algos/training_log.hpp"
#include "gsde/envs/env.hpp"
#include "gsde/exploration/ou.hpp"
#include "gsde/exploration/param_noise.hpp"
#include "gsde/seeding.hpp"

namespace gsde {

struct SacTrainResult {
  SacAgent agent;
  TrainingLog log;
  ReplayBuffer buffer;
  std::size_t steps = 0;
  std::size_t gradient_steps = 0;
  /// Set when training stopped early on a non-finite loss or parameter.
  std::optional<std::string> error;
};

/// Episodic SAC: collect one episode, then as many gradient steps as the
/// episode had transitions (once past warm-up). During warm-up actions are
/// uniform in [-1, 1]; with exploration disabled the deterministic policy is
/// used instead so the run stays noise-free. Evaluations run on a clone of
/// `env` at t = 0, every `eval_interval` steps and at the end of the budget.
SacTrainResult sac_train(const SacConfig& config, const TrainSettings& settings, Env& env, SeedStreams& streams);

/// Exploration action in [-1, 1] for one observation. Advances the gSDE
/// step counter, the OU state or nothing, depending on the noise type.
struct SacExplorer {
  SacExplorer(const SacAgent& agent, const SacConfig& config);
  void episode_start(SacAgent& agent, Rng& rng);
  std::vector<double> act(SacAgent& agent, std::span<const double> obs, Rng& rng);
  void episode_end(const SacAgent& agent, const Matrix& episode_states);

  OuProcess ou;
  ParamNoise param;
  Mlp perturbed;
};

}  // namespace gsde
