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

#include "gsde/envs/wrappers.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsde {

std::vector<double> wrap_time_feature(std::span<const double> obs, std::size_t t, std::size_t horizon) {
  if (t > horizon) throw std::out_of_range("time feature: step count exceeds horizon");
  std::vector<double> out(obs.begin(), obs.end());
  out.push_back(static_cast<double>(horizon - t) / static_cast<double>(horizon));
  return out;
}

TimeFeatureWrapper::TimeFeatureWrapper(std::unique_ptr<Env> inner) : inner_(std::move(inner)) {}

std::vector<double> TimeFeatureWrapper::reset(std::uint64_t seed) {
  return wrap_time_feature(inner_->reset(seed), 0, horizon());
}

StepResult TimeFeatureWrapper::step(std::span<const double> action) {
  StepResult r = inner_->step(action);
  r.observation = wrap_time_feature(r.observation, inner_->elapsed_steps(), horizon());
  return r;
}

std::unique_ptr<Env> TimeFeatureWrapper::clone() const {
  return std::make_unique<TimeFeatureWrapper>(inner_->clone());
}

HistoryWrapper::HistoryWrapper(std::unique_ptr<Env> inner)
    : inner_(std::move(inner)),
      previous_(inner_->observation_dim(), 0.0),
      last_action_(inner_->action_dim(), 0.0) {}

std::vector<double> HistoryWrapper::compose(std::span<const double> current) const {
  std::vector<double> out(current.begin(), current.end());
  out.insert(out.end(), previous_.begin(), previous_.end());
  out.insert(out.end(), last_action_.begin(), last_action_.end());
  return out;
}

std::vector<double> HistoryWrapper::reset(std::uint64_t seed) {
  std::fill(previous_.begin(), previous_.end(), 0.0);
  std::fill(last_action_.begin(), last_action_.end(), 0.0);
  auto obs = inner_->reset(seed);
  auto out = compose(obs);
  previous_ = std::move(obs);
  return out;
}

StepResult HistoryWrapper::step(std::span<const double> action) {
  StepResult r = inner_->step(action);
  last_action_ = clip_action(action, inner_->action_limit());
  // previous_ currently holds the observation the action was taken from
  auto composed = compose(r.observation);
  previous_ = std::move(r.observation);
  r.observation = std::move(composed);
  return r;
}

std::unique_ptr<Env> HistoryWrapper::clone() const {
  auto copy = std::make_unique<HistoryWrapper>(inner_->clone());
  copy->previous_ = previous_;
  copy->last_action_ = last_action_;
  return copy;
}

}  // namespace gsde
