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

#include "gsde/algos/replay_buffer.hpp"

#include <algorithm>
#include <stdexcept>

#include "gsde/error.hpp"

namespace gsde {

ReplayBuffer::ReplayBuffer(std::size_t capacity, std::size_t obs_dim, std::size_t action_dim)
    : capacity_(capacity),
      obs_dim_(obs_dim),
      action_dim_(action_dim),
      obs_(capacity * obs_dim),
      actions_(capacity * action_dim),
      next_obs_(capacity * obs_dim),
      rewards_(capacity),
      dones_(capacity) {
  if (capacity == 0) throw std::invalid_argument("replay buffer capacity must be positive");
}

void ReplayBuffer::add(std::span<const double> obs, std::span<const double> action, double reward,
                       std::span<const double> next_obs, bool done) {
  if (obs.size() != obs_dim_ || next_obs.size() != obs_dim_ || action.size() != action_dim_) {
    throw ShapeError("replay buffer: transition shape mismatch");
  }
  std::copy(obs.begin(), obs.end(), obs_.begin() + cursor_ * obs_dim_);
  std::copy(action.begin(), action.end(), actions_.begin() + cursor_ * action_dim_);
  std::copy(next_obs.begin(), next_obs.end(), next_obs_.begin() + cursor_ * obs_dim_);
  rewards_[cursor_] = reward;
  dones_[cursor_] = done ? 1.0 : 0.0;
  cursor_ = (cursor_ + 1) % capacity_;
  size_ = std::min(size_ + 1, capacity_);
}

ReplayBatch ReplayBuffer::gather(std::span<const std::size_t> indices) const {
  const std::size_t n = indices.size();
  ReplayBatch b{Matrix(n, obs_dim_), Matrix(n, action_dim_), Matrix(n, obs_dim_), std::vector<double>(n),
                std::vector<double>(n)};
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t i = indices[r];
    if (i >= size_) throw std::out_of_range("replay buffer index outside filled region");
    std::copy_n(obs_.begin() + i * obs_dim_, obs_dim_, b.observations.row(r).begin());
    std::copy_n(actions_.begin() + i * action_dim_, action_dim_, b.actions.row(r).begin());
    std::copy_n(next_obs_.begin() + i * obs_dim_, obs_dim_, b.next_observations.row(r).begin());
    b.rewards[r] = rewards_[i];
    b.dones[r] = dones_[i];
  }
  return b;
}

ReplayBatch ReplayBuffer::sample(std::size_t batch_size, Rng& rng) const {
  if (size_ == 0) throw std::logic_error("replay buffer: sampling from an empty buffer");
  std::vector<std::size_t> idx(batch_size);
  for (auto& i : idx) i = rng.uniform_index(size_);
  return gather(idx);
}

}  // namespace gsde
