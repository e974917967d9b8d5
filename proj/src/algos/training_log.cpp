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

#include "gsde/algos/training_log.hpp"

#include <stdexcept>

namespace gsde {

LogRow& TrainingLog::row_at(std::size_t timestep) {
  if (!rows_.empty()) {
    if (rows_.back().timestep == timestep) return rows_.back();
    if (rows_.back().timestep > timestep) throw std::logic_error("training log: timesteps must increase");
  }
  rows_.push_back(LogRow{timestep});
  return rows_.back();
}

void TrainingLog::add_episode(std::size_t timestep, std::size_t episode, double episode_return,
                              std::optional<double> continuity, std::optional<double> wall_clock) {
  if (!rows_.empty() && rows_.back().timestep == timestep && rows_.back().episode) {
    throw std::logic_error("training log: two episodes ending at the same timestep");
  }
  LogRow& row = row_at(timestep);
  row.episode = episode;
  row.episode_return = episode_return;
  row.episode_continuity = continuity;
  if (wall_clock) row.wall_clock_seconds = wall_clock;
}

void TrainingLog::add_eval(std::size_t timestep, EvalReport report, std::optional<double> wall_clock) {
  LogRow& row = row_at(timestep);
  report.timestep = timestep;
  row.eval = report;
  if (wall_clock) row.wall_clock_seconds = wall_clock;
}

std::optional<double> TrainingLog::mean_train_continuity() const {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& r : rows_) {
    if (r.episode_continuity) {
      sum += *r.episode_continuity;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

std::optional<EvalReport> TrainingLog::first_eval() const {
  for (const auto& r : rows_) {
    if (r.eval) return r.eval;
  }
  return std::nullopt;
}

std::optional<EvalReport> TrainingLog::last_eval() const {
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    if (it->eval) return it->eval;
  }
  return std::nullopt;
}

std::size_t TrainingLog::episode_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.episode ? 1 : 0;
  return n;
}

}  // namespace gsde
