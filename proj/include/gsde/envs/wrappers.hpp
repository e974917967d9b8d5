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

#include <memory>

#include "gsde/envs/env.hpp"

namespace gsde {

/// obs + [(horizon - t) / horizon]. Throws std::out_of_range if t > horizon.
std::vector<double> wrap_time_feature(std::span<const double> obs, std::size_t t, std::size_t horizon);

/// Appends the remaining fraction of the episode to every observation.
class TimeFeatureWrapper final : public Env {
 public:
  explicit TimeFeatureWrapper(std::unique_ptr<Env> inner);

  std::vector<double> reset(std::uint64_t seed) override;
  StepResult step(std::span<const double> action) override;

  std::size_t observation_dim() const override { return inner_->observation_dim() + 1; }
  std::size_t action_dim() const override { return inner_->action_dim(); }
  double action_limit() const override { return inner_->action_limit(); }
  std::size_t horizon() const override { return inner_->horizon(); }
  std::size_t elapsed_steps() const override { return inner_->elapsed_steps(); }
  bool finished() const override { return inner_->finished(); }
  std::string id() const override { return inner_->id(); }
  std::unique_ptr<Env> clone() const override;

  const Env& inner() const { return *inner_; }

 private:
  std::unique_ptr<Env> inner_;
};

/// Observation becomes concat(current obs, previous obs, last applied action);
/// the history part is zero right after reset.
class HistoryWrapper final : public Env {
 public:
  explicit HistoryWrapper(std::unique_ptr<Env> inner);

  std::vector<double> reset(std::uint64_t seed) override;
  StepResult step(std::span<const double> action) override;

  std::size_t observation_dim() const override { return 2 * inner_->observation_dim() + inner_->action_dim(); }
  std::size_t action_dim() const override { return inner_->action_dim(); }
  double action_limit() const override { return inner_->action_limit(); }
  std::size_t horizon() const override { return inner_->horizon(); }
  std::size_t elapsed_steps() const override { return inner_->elapsed_steps(); }
  bool finished() const override { return inner_->finished(); }
  std::string id() const override { return inner_->id(); }
  std::unique_ptr<Env> clone() const override;

  const Env& inner() const { return *inner_; }

 private:
  std::vector<double> compose(std::span<const double> current) const;

  std::unique_ptr<Env> inner_;
  std::vector<double> previous_;
  std::vector<double> last_action_;
};

}  // namespace gsde
