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

#include <cstdint>
#include <span>
#include <vector>

namespace gsde {

struct AdamConfig {
  double learning_rate = 7.3e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  bool operator==(const AdamConfig&) const = default;
};

/// First/second moment estimates for a list of parameter tensors.
struct AdamState {
  AdamConfig config;
  std::vector<std::vector<double>> first_moment;
  std::vector<std::vector<double>> second_moment;
  std::int64_t step = 0;

  bool operator==(const AdamState&) const = default;
};

AdamState make_adam_state(std::span<const std::span<const double>> params, AdamConfig config);
AdamState make_adam_state(std::span<const std::span<double>> params, AdamConfig config);

/// One bias-corrected Adam update. Throws NonFiniteError (and leaves params
/// and state untouched) if any gradient is NaN or infinite.
void adam_step(std::span<const std::span<double>> params, std::span<const std::span<const double>> grads,
               AdamState& state);

/// Global L2 norm across all tensors.
double global_norm(std::span<const std::span<const double>> grads);

/// Scales every tensor by max_norm / norm when the global norm exceeds
/// max_norm. Returns the norm measured before clipping.
double clip_grad_norm(std::span<const std::span<double>> grads, double max_norm);

/// target <- tau * online + (1 - tau) * target, elementwise.
void soft_update(std::span<const std::span<const double>> online, std::span<const std::span<double>> target,
                 double tau);

/// Read-only views of mutable spans.
std::vector<std::span<const double>> as_const(std::span<const std::span<double>> spans);

}  // namespace gsde
