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

#include "gsde/nn/matrix.hpp"
#include "gsde/random.hpp"

namespace gsde {

struct ReplayBatch {
  Matrix observations;
  Matrix actions;
  Matrix next_observations;
  std::vector<double> rewards;
  std::vector<double> dones;
};

/// Fixed-capacity circular store of (s, a, r, s', done).
class ReplayBuffer {
 public:
  ReplayBuffer(std::size_t capacity, std::size_t obs_dim, std::size_t action_dim);

  void add(std::span<const double> obs, std::span<const double> action, double reward,
           std::span<const double> next_obs, bool done);
  /// Uniform sampling with replacement over the filled region.
  ReplayBatch sample(std::size_t batch_size, Rng& rng) const;
  ReplayBatch gather(std::span<const std::size_t> indices) const;

  std::size_t size() const noexcept { return size_; }
  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t obs_dim() const noexcept { return obs_dim_; }
  std::size_t action_dim() const noexcept { return action_dim_; }

  /// Stored entry `i` in insertion-slot order.
  std::span<const double> observation(std::size_t i) const { return {obs_.data() + i * obs_dim_, obs_dim_}; }
  std::span<const double> action(std::size_t i) const { return {actions_.data() + i * action_dim_, action_dim_}; }
  double reward(std::size_t i) const { return rewards_[i]; }

  bool operator==(const ReplayBuffer&) const = default;

 private:
  std::size_t capacity_;
  std::size_t obs_dim_;
  std::size_t action_dim_;
  std::size_t cursor_ = 0;
  std::size_t size_ = 0;
  std::vector<double> obs_;
  std::vector<double> actions_;
  std::vector<double> next_obs_;
  std::vector<double> rewards_;
  std::vector<double> dones_;
};

}  // namespace gsde
