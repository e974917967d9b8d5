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
#include <optional>
#include <vector>

#include "gsde/metrics/evaluate.hpp"

namespace gsde {

/// Budget and evaluation schedule shared by the training loops.
struct TrainSettings {
  std::size_t total_steps = 0;
  std::size_t eval_interval = 10000;  // 0 disables intermediate evaluations
  std::size_t eval_episodes = 20;
  bool wall_clock = false;            // record elapsed seconds per row
  bool operator==(const TrainSettings&) const = default;
};

/// One row of a run log: an episode that ended at `timestep`, an evaluation
/// taken at `timestep`, or both.
struct LogRow {
  std::size_t timestep = 0;
  std::optional<std::size_t> episode;
  std::optional<double> episode_return;
  std::optional<double> episode_continuity;
  std::optional<EvalReport> eval;
  std::optional<double> wall_clock_seconds;

  bool operator==(const LogRow&) const = default;
};

/// Append-only log with strictly increasing timesteps. An evaluation at the
/// same timestep as the last episode is merged into that row.
class TrainingLog {
 public:
  void add_episode(std::size_t timestep, std::size_t episode, double episode_return,
                   std::optional<double> continuity, std::optional<double> wall_clock = std::nullopt);
  void add_eval(std::size_t timestep, EvalReport report, std::optional<double> wall_clock = std::nullopt);

  const std::vector<LogRow>& rows() const noexcept { return rows_; }
  bool empty() const noexcept { return rows_.empty(); }

  /// Mean of per-episode continuity costs (episodes with fewer than two
  /// actions are skipped). nullopt if no episode qualifies.
  std::optional<double> mean_train_continuity() const;
  std::optional<EvalReport> first_eval() const;
  std::optional<EvalReport> last_eval() const;
  std::size_t episode_count() const;

 private:
  LogRow& row_at(std::size_t timestep);
  std::vector<LogRow> rows_;
};

}  // namespace gsde
