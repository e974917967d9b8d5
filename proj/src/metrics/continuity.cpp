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

#include "gsde/metrics/continuity.hpp"

#include <stdexcept>

#include "gsde/error.hpp"

namespace gsde {

Trajectory Trajectory::symmetric(std::size_t action_dim, double limit) {
  Trajectory t;
  t.lower.assign(action_dim, -limit);
  t.upper.assign(action_dim, limit);
  return t;
}

double continuity_cost(const Trajectory& trajectory) {
  const auto& actions = trajectory.actions;
  if (actions.size() < 2) throw std::invalid_argument("continuity_cost: need at least two actions");
  const std::size_t dim = trajectory.lower.size();
  if (trajectory.upper.size() != dim || dim == 0) throw ShapeError("continuity_cost: malformed bounds");
  for (std::size_t j = 0; j < dim; ++j) {
    if (!(trajectory.upper[j] > trajectory.lower[j])) throw std::invalid_argument("continuity_cost: empty action range");
  }
  for (const auto& a : actions) {
    if (a.size() != dim) throw ShapeError("continuity_cost: action dimension mismatch");
    for (std::size_t j = 0; j < dim; ++j) {
      if (a[j] < trajectory.lower[j] || a[j] > trajectory.upper[j]) {
        throw std::invalid_argument("continuity_cost: action outside bounds");
      }
    }
  }

  double sum = 0.0;
  for (std::size_t t = 0; t + 1 < actions.size(); ++t) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double d = (actions[t + 1][j] - actions[t][j]) / (trajectory.upper[j] - trajectory.lower[j]);
      sum += d * d;
    }
  }
  return 100.0 * sum / static_cast<double>((actions.size() - 1) * dim);
}

}  // namespace gsde
