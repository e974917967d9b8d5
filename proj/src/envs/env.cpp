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

#include "gsde/envs/env.hpp"

#include <algorithm>
#include <stdexcept>

#include "gsde/envs/double_integrator.hpp"
#include "gsde/envs/pendulum.hpp"
#include "gsde/envs/wrappers.hpp"

namespace gsde {

StepResult Env::step_normalized(std::span<const double> action) {
  std::vector<double> scaled(action.begin(), action.end());
  const double limit = action_limit();
  for (double& a : scaled) a *= limit;
  return step(scaled);
}

std::vector<double> clip_action(std::span<const double> action, double limit) {
  std::vector<double> out(action.size());
  std::transform(action.begin(), action.end(), out.begin(), [limit](double a) { return std::clamp(a, -limit, limit); });
  return out;
}

std::unique_ptr<Env> make_env(const EnvSpec& spec) {
  std::unique_ptr<Env> env;
  if (spec.id == "pendulum") {
    env = std::make_unique<Pendulum>();
  } else if (spec.id == "double_integrator") {
    env = std::make_unique<DoubleIntegrator>();
  } else {
    throw std::invalid_argument("unknown environment id '" + spec.id + "'");
  }
  if (spec.history) env = std::make_unique<HistoryWrapper>(std::move(env));
  if (spec.time_feature) env = std::make_unique<TimeFeatureWrapper>(std::move(env));
  return env;
}

}  // namespace gsde
