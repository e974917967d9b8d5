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

struct DoubleIntegratorConfig {
  double dt = 0.1;
  double max_force = 1.0;
  std::size_t horizon = 100;
};

/// Point mass on a line: v <- v + u dt, x <- x + v dt.
/// Observation (x, v); reward -(x^2 + 0.1 v^2 + 0.001 u^2).
class DoubleIntegrator final : public Env {
 public:
  explicit DoubleIntegrator(DoubleIntegratorConfig config = {});

  std::vector<double> reset(std::uint64_t seed) override;
  StepResult step(std::span<const double> action) override;

  std::size_t observation_dim() const override { return 2; }
  std::size_t action_dim() const override { return 1; }
  double action_limit() const override { return config_.max_force; }
  std::size_t horizon() const override { return config_.horizon; }
  std::size_t elapsed_steps() const override { return elapsed_; }
  bool finished() const override { return elapsed_ >= config_.horizon; }
  std::string id() const override { return "double_integrator"; }
  std::unique_ptr<Env> clone() const override { return std::make_unique<DoubleIntegrator>(*this); }

  void set_state(double position, double velocity);
  double position() const noexcept { return position_; }
  double velocity() const noexcept { return velocity_; }
  const DoubleIntegratorConfig& config() const noexcept { return config_; }

 private:
  DoubleIntegratorConfig config_;
  double position_ = 0.0;
  double velocity_ = 0.0;
  std::size_t elapsed_ = 0;
};

}  // namespace gsde
