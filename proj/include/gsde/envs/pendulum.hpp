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

#include "gsde/envs/env.hpp"

namespace gsde {

struct PendulumConfig {
  double gravity = 10.0;
  double mass = 1.0;
  double length = 1.0;
  double dt = 0.05;
  double max_torque = 2.0;
  double max_speed = 8.0;
  std::size_t horizon = 200;
};

/// Torque-limited pendulum swing-up. theta = 0 is upright. Observation is
/// (cos theta, sin theta, theta_dot); reward -(wrap(theta)^2 + 0.1 theta_dot^2 + 0.001 u^2).
class Pendulum final : public Env {
 public:
  explicit Pendulum(PendulumConfig config = {});

  std::vector<double> reset(std::uint64_t seed) override;
  StepResult step(std::span<const double> action) override;

  std::size_t observation_dim() const override { return 3; }
  std::size_t action_dim() const override { return 1; }
  double action_limit() const override { return config_.max_torque; }
  std::size_t horizon() const override { return config_.horizon; }
  std::size_t elapsed_steps() const override { return elapsed_; }
  bool finished() const override { return elapsed_ >= config_.horizon; }
  std::string id() const override { return "pendulum"; }
  std::unique_ptr<Env> clone() const override { return std::make_unique<Pendulum>(*this); }

  void set_state(double theta, double theta_dot);
  double theta() const noexcept { return theta_; }
  double theta_dot() const noexcept { return theta_dot_; }
  std::vector<double> observation() const;
  const PendulumConfig& config() const noexcept { return config_; }

 private:
  PendulumConfig config_;
  double theta_ = 0.0;
  double theta_dot_ = 0.0;
  std::size_t elapsed_ = 0;
};

/// Angle mapped into (-pi, pi].
double wrap_angle(double theta);

/// Single pendulum step with the given torque, pulled out for oracle tests.
/// Returns (theta, theta_dot) after one semi-implicit Euler step of size dt.
std::pair<double, double> pendulum_dynamics(const PendulumConfig& config, double theta, double theta_dot,
                                            double torque, double dt);

}  // namespace gsde
