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

#include "gsde/metrics/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gsde/metrics/evaluate.hpp"

namespace gsde {

std::vector<ParetoPoint> aggregate_pareto(std::span<const ParetoGroup> groups) {
  std::vector<ParetoPoint> points;
  for (const auto& g : groups) {
    if (g.runs.empty()) throw std::invalid_argument("aggregate_pareto: group '" + g.label + "' has no runs");
    std::vector<double> returns;
    std::vector<double> costs;
    for (const auto& r : g.runs) {
      returns.push_back(r.final_return);
      costs.push_back(r.train_continuity);
    }
    const MeanSe ret = mean_and_standard_error(returns);
    const MeanSe cost = mean_and_standard_error(costs);
    points.push_back({g.label, g.interval, ret.mean, ret.se, 0.0, cost.mean, cost.se, g.runs.size()});
  }
  if (points.empty()) return points;
  const double best = std::max_element(points.begin(), points.end(), [](const auto& a, const auto& b) {
                        return a.mean_return < b.mean_return;
                      })->mean_return;
  const double scale = best != 0.0 ? std::abs(best) : 1.0;
  for (auto& p : points) p.normalized_return = 1.0 + (p.mean_return - best) / scale;
  return points;
}

}  // namespace gsde
