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
#include <string>
#include <vector>

namespace gsde {

/// What one finished training run contributes to a Pareto point.
struct RunSummary {
  double final_return = 0.0;      // last deterministic evaluation
  double train_continuity = 0.0;  // mean over training episodes
};

struct ParetoGroup {
  std::string label;     // e.g. "gsde-8", "ou"
  std::string interval;  // sampling interval label, empty for non-gsde noise
  std::vector<RunSummary> runs;
};

struct ParetoPoint {
  std::string label;
  std::string interval;
  double mean_return = 0.0;
  double se_return = 0.0;
  double normalized_return = 0.0;
  double mean_train_continuity = 0.0;
  double se_train_continuity = 0.0;
  std::size_t seeds = 0;
};

/// One point per group, in input order. `normalized_return` is
/// 1 + (mean - best) / |best| where best is the largest group mean, so the
/// best configuration sits at exactly 1.0 for either sign of return.
std::vector<ParetoPoint> aggregate_pareto(std::span<const ParetoGroup> groups);

}  // namespace gsde
