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
#include <cstdint>

#include "gsde/envs/env.hpp"
#include "gsde/metrics/policy.hpp"

namespace gsde {

struct EvalReport {
  double mean_return = 0.0;
  double se_return = 0.0;
  double mean_continuity = 0.0;
  std::size_t episodes = 0;
  std::size_t timestep = 0;

  bool operator==(const EvalReport&) const = default;
};

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;  // sample std (n - 1) / sqrt(n); 0 for a single value
};

MeanSe mean_and_standard_error(std::span<const double> values);

/// Runs `episodes` noise-free episodes. Episode reset seeds are drawn from
/// Rng(seed), so the same (policy, env, seed) always gives the same report.
EvalReport evaluate_policy(const Policy& policy, Env& env, std::size_t episodes, std::uint64_t seed);

}  // namespace gsde
