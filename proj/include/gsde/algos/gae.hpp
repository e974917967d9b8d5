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

struct GaeResult {
  std::vector<double> advantages;
  std::vector<double> returns;  // advantages + values
};

/// Generalized advantage estimation over one worker's trajectory segment.
/// values[t] is V(s_t); `last_value` is V of the state after the last step.
/// dones[t] = 1 cuts the bootstrap from t into t + 1.
GaeResult gae_compute(std::span<const double> rewards, std::span<const double> values,
                      std::span<const double> dones, double last_value, double gamma, double lambda);

}  // namespace gsde
