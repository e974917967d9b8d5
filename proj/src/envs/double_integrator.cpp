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

#include "gsde/envs/double_integrator.hpp"

#include <algorithm>

#include "gsde/error.hpp"
#include "gsde/random.hpp"

namespace gsde {

DoubleIntegrator::DoubleIntegrator(DoubleIntegratorConfig config) : config_(config) {}

std::vector<double> DoubleIntegrator::reset(std::uint64_t seed) {
  Rng rng(seed);
  position_ = rng.uniform(-1.0, 1.0);
  velocity_ = 0.0;
  elapsed_ = 0;
  return {position_, velocity_};
}

StepResult DoubleIntegrator::step(std::span<const double> action) {
  if (finished()) throw EnvError("double_integrator: step called on a finished episode");
  if (action.size() != 1) throw ShapeError("double_integrator: expected a 1-d action");
  const double u = std::clamp(action[0], -config_.max_force, config_.max_force);
  const double cost = position_ * position_ + 0.1 * velocity_ * velocity_ + 0.001 * u * u;

  velocity_ += u * config_.dt;
  position_ += velocity_ * config_.dt;
  ++elapsed_;

  StepResult r;
  r.observation = {position_, velocity_};
  r.reward = -cost;
  r.truncated = elapsed_ >= config_.horizon;
  return r;
}

void DoubleIntegrator::set_state(double position, double velocity) {
  position_ = position;
  velocity_ = velocity;
}

}  // namespace gsde
