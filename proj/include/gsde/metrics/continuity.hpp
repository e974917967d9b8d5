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

#include <span>
#include <vector>

namespace gsde {

/// Ordered actions of one episode together with the per-dimension bounds.
struct Trajectory {
  std::vector<std::vector<double>> actions;
  std::vector<double> lower;
  std::vector<double> upper;

  /// Symmetric bounds [-limit, limit] in every dimension.
  static Trajectory symmetric(std::size_t action_dim, double limit);
};

/// 100 * mean over steps and dimensions of ((a_{t+1} - a_t) / (upper - lower))^2.
/// Lies in [0, 100] for in-bounds trajectories. Requires at least two actions.
double continuity_cost(const Trajectory& trajectory);

}  // namespace gsde
