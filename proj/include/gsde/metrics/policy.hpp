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

/// Anything that can act without exploration noise.
class Policy {
 public:
  virtual ~Policy() = default;
  /// Noise-free action in [-1, 1]^action_dim for one observation.
  virtual std::vector<double> deterministic_action(std::span<const double> observation) const = 0;
};

}  // namespace gsde
