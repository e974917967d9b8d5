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
#include <vector>

#include "gsde/random.hpp"

namespace gsde {

struct OuConfig {
  double theta = 0.15;  // mean-reversion rate
  double sigma = 0.2;
  double dt = 1.0;
};

/// Ornstein-Uhlenbeck action noise with zero long-run mean, discretised as
/// x <- x - theta x dt + sigma sqrt(dt) N(0, I).
class OuProcess {
 public:
  OuProcess(std::size_t dim, OuConfig config = {});

  std::span<const double> step(Rng& rng);
  void reset();

  const std::vector<double>& state() const noexcept { return state_; }
  void set_state(std::vector<double> state);
  const OuConfig& config() const noexcept { return config_; }

 private:
  OuConfig config_;
  std::vector<double> state_;
};

/// Free-function form of OuProcess::step.
inline std::span<const double> ou_step(OuProcess& process, Rng& rng) { return process.step(rng); }

}  // namespace gsde
