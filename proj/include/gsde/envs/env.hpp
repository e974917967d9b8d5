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
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace gsde {

struct StepResult {
  std::vector<double> observation;
  double reward = 0.0;
  bool terminated = false;
  bool truncated = false;  // time limit reached

  bool done() const noexcept { return terminated || truncated; }
};

/// Episodic continuous-control task with a symmetric box action space
/// [-action_limit, action_limit]^action_dim. Out-of-range actions are clipped.
class Env {
 public:
  virtual ~Env() = default;

  virtual std::vector<double> reset(std::uint64_t seed) = 0;
  /// Throws EnvError when called on a finished episode.
  virtual StepResult step(std::span<const double> action) = 0;

  virtual std::size_t observation_dim() const = 0;
  virtual std::size_t action_dim() const = 0;
  virtual double action_limit() const = 0;
  virtual std::size_t horizon() const = 0;
  virtual std::size_t elapsed_steps() const = 0;
  virtual bool finished() const = 0;
  virtual std::string id() const = 0;
  virtual std::unique_ptr<Env> clone() const = 0;

  /// Steps with an action given in [-1, 1], scaled to the env's range.
  StepResult step_normalized(std::span<const double> action);
};

/// Symmetric clip into [-limit, limit].
std::vector<double> clip_action(std::span<const double> action, double limit);

struct EnvSpec {
  std::string id = "pendulum";
  bool time_feature = true;
  bool history = false;

  bool operator==(const EnvSpec&) const = default;
};

/// Builds "pendulum" or "double_integrator", optionally wrapped as
/// TimeFeature(History(env)). Throws std::invalid_argument for unknown ids.
std::unique_ptr<Env> make_env(const EnvSpec& spec);

}  // namespace gsde
