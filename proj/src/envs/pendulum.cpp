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

#include "gsde/envs/pendulum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gsde/error.hpp"
#include "gsde/random.hpp"

namespace gsde {

double wrap_angle(double theta) {
  constexpr double pi = std::numbers::pi;
  double w = std::fmod(theta + pi, 2.0 * pi);
  if (w <= 0.0) w += 2.0 * pi;
  return w - pi;
}

std::pair<double, double> pendulum_dynamics(const PendulumConfig& c, double theta, double theta_dot, double torque,
                                            double dt) {
  const double accel = 3.0 * c.gravity / (2.0 * c.length) * std::sin(theta) + 3.0 / (c.mass * c.length * c.length) * torque;
  const double next_dot = std::clamp(theta_dot + accel * dt, -c.max_speed, c.max_speed);
  return {theta + next_dot * dt, next_dot};
}

Pendulum::Pendulum(PendulumConfig config) : config_(config) {}

std::vector<double> Pendulum::reset(std::uint64_t seed) {
  Rng rng(seed);
  theta_ = rng.uniform(-std::numbers::pi, std::numbers::pi);
  theta_dot_ = rng.uniform(-1.0, 1.0);
  elapsed_ = 0;
  return observation();
}

StepResult Pendulum::step(std::span<const double> action) {
  if (finished()) throw EnvError("pendulum: step called on a finished episode");
  if (action.size() != 1) throw ShapeError("pendulum: expected a 1-d action");
  const double u = std::clamp(action[0], -config_.max_torque, config_.max_torque);
  const double angle = wrap_angle(theta_);
  const double cost = angle * angle + 0.1 * theta_dot_ * theta_dot_ + 0.001 * u * u;

  std::tie(theta_, theta_dot_) = pendulum_dynamics(config_, theta_, theta_dot_, u, config_.dt);
  ++elapsed_;

  StepResult r;
  r.observation = observation();
  r.reward = -cost;
  r.truncated = elapsed_ >= config_.horizon;
  return r;
}

void Pendulum::set_state(double theta, double theta_dot) {
  theta_ = theta;
  theta_dot_ = theta_dot;
}

std::vector<double> Pendulum::observation() const { return {std::cos(theta_), std::sin(theta_), theta_dot_}; }

}  // namespace gsde
