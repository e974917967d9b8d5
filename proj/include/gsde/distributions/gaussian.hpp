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

#include "gsde/random.hpp"

namespace gsde {

inline constexpr double kLogStdMin = -20.0;
inline constexpr double kLogStdMax = 2.0;
/// Standard deviations are floored here before any log or division.
inline constexpr double kMinStd = 1e-6;

struct LogProb {
  double value = 0.0;
  /// Number of dimensions whose std was raised to kMinStd.
  std::size_t floored = 0;
};

/// Diagonal Gaussian log-density, sum over dimensions.
LogProb gaussian_log_prob(std::span<const double> x, std::span<const double> mean, std::span<const double> stddev);

/// Differential entropy of N(mean, diag(std^2)).
double gaussian_entropy(std::span<const double> stddev);

/// Monte-Carlo entropy estimate -mean(log_prob) for distributions without a
/// closed form (tanh-squashed ones).
double sampled_entropy(std::span<const double> log_probs);

/// Unstructured Gaussian exploration: independent noise per step.
class DiagGaussian {
 public:
  /// log_std is clamped to [kLogStdMin, kLogStdMax].
  DiagGaussian(std::vector<double> mean, std::vector<double> log_std);

  const std::vector<double>& mean() const noexcept { return mean_; }
  const std::vector<double>& log_std() const noexcept { return log_std_; }
  std::vector<double> stddev() const;

  std::vector<double> sample(Rng& rng) const;
  LogProb log_prob(std::span<const double> x) const;
  double entropy() const;

 private:
  std::vector<double> mean_;
  std::vector<double> log_std_;
};

}  // namespace gsde
