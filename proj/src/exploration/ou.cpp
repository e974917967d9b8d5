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

#include "gsde/exploration/ou.hpp"

#include <algorithm>
#include <cmath>

#include "gsde/error.hpp"

namespace gsde {

OuProcess::OuProcess(std::size_t dim, OuConfig config) : config_(config), state_(dim, 0.0) {}

std::span<const double> OuProcess::step(Rng& rng) {
  const double scale = config_.sigma * std::sqrt(config_.dt);
  for (double& x : state_) x = x + config_.theta * (0.0 - x) * config_.dt + scale * rng.normal();
  return state_;
}

void OuProcess::reset() { std::fill(state_.begin(), state_.end(), 0.0); }

void OuProcess::set_state(std::vector<double> state) {
  if (state.size() != state_.size()) throw ShapeError("OuProcess::set_state: dimension mismatch");
  state_ = std::move(state);
}

}  // namespace gsde
