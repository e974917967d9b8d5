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
#include <span>
#include <vector>

namespace gsde {

/// Running per-dimension mean and variance (parallel-merge update), used to
/// normalise observations and scale rewards.
class RunningMeanStd {
 public:
  explicit RunningMeanStd(std::size_t dim = 1, double epsilon = 1e-4);
  /// Folds in a batch given as `count` rows of `dim` values.
  void update(std::span<const double> batch, std::size_t count);
  std::size_t dim() const noexcept { return mean_.size(); }
  const std::vector<double>& mean() const noexcept { return mean_; }
  const std::vector<double>& var() const noexcept { return var_; }
  double count() const noexcept { return count_; }
  void restore(std::vector<double> mean, std::vector<double> var, double count);
  bool operator==(const RunningMeanStd&) const = default;

 private:
  std::vector<double> mean_;
  std::vector<double> var_;
  double count_;
};

/// Observation normalisation and reward scaling with clipping at +-clip.
/// Rewards are divided by the running std of the discounted return.
struct VecNormalize {
  VecNormalize(std::size_t obs_dim, double gamma, double clip = 10.0, double epsilon = 1e-8);

  std::vector<double> normalize_observation(std::span<const double> obs) const;
  double normalize_reward(double reward) const;

  RunningMeanStd obs_stats;
  RunningMeanStd return_stats;
  double gamma;
  double clip;
  double epsilon;
  bool operator==(const VecNormalize&) const = default;
};

}  // namespace gsde
