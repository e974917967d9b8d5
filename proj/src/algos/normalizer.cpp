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

#include "gsde/algos/normalizer.hpp"

#include <algorithm>
#include <cmath>

#include "gsde/error.hpp"

namespace gsde {

RunningMeanStd::RunningMeanStd(std::size_t dim, double epsilon) : mean_(dim, 0.0), var_(dim, 1.0), count_(epsilon) {}

void RunningMeanStd::update(std::span<const double> batch, std::size_t count) {
  const std::size_t d = dim();
  if (batch.size() != count * d) throw ShapeError("RunningMeanStd: batch size != count * dim");
  if (count == 0) return;
  const double n = static_cast<double>(count);
  std::vector<double> bmean(d, 0.0), bvar(d, 0.0);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t j = 0; j < d; ++j) bmean[j] += batch[r * d + j];
  for (double& m : bmean) m /= n;
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t j = 0; j < d; ++j) bvar[j] += (batch[r * d + j] - bmean[j]) * (batch[r * d + j] - bmean[j]);
  for (double& v : bvar) v /= n;

  const double total = count_ + n;
  for (std::size_t j = 0; j < d; ++j) {
    const double delta = bmean[j] - mean_[j];
    const double m2 = var_[j] * count_ + bvar[j] * n + delta * delta * count_ * n / total;
    mean_[j] += delta * n / total;
    var_[j] = m2 / total;
  }
  count_ = total;
}

void RunningMeanStd::restore(std::vector<double> mean, std::vector<double> var, double count) {
  if (mean.size() != var.size()) throw ShapeError("RunningMeanStd: mean/var size mismatch");
  mean_ = std::move(mean);
  var_ = std::move(var);
  count_ = count;
}

VecNormalize::VecNormalize(std::size_t obs_dim, double gamma_, double clip_, double epsilon_)
    : obs_stats(obs_dim), return_stats(1), gamma(gamma_), clip(clip_), epsilon(epsilon_) {}

std::vector<double> VecNormalize::normalize_observation(std::span<const double> obs) const {
  if (obs.size() != obs_stats.dim()) throw ShapeError("VecNormalize: observation width mismatch");
  std::vector<double> out(obs.size());
  for (std::size_t j = 0; j < obs.size(); ++j) {
    const double z = (obs[j] - obs_stats.mean()[j]) / std::sqrt(obs_stats.var()[j] + epsilon);
    out[j] = std::clamp(z, -clip, clip);
  }
  return out;
}

double VecNormalize::normalize_reward(double reward) const {
  return std::clamp(reward / std::sqrt(return_stats.var()[0] + epsilon), -clip, clip);
}

}  // namespace gsde
