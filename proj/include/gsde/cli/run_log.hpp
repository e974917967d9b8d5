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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsde/algos/training_log.hpp"
#include "gsde/metrics/pareto.hpp"

namespace gsde {

inline constexpr std::string_view kRunLogHeader =
    "timestep,episode,episode_return,episode_continuity,eval_return,eval_se,eval_continuity,wall_clock_seconds";
inline constexpr std::string_view kParetoHeader = "label,interval,mean_return,se_return,mean_ctrain,se_ctrain,n_seeds";

/// Header plus one line per row; empty cells for absent values. A non-empty
/// `error` becomes a trailing "# error: ..." line.
std::string format_run_log(const TrainingLog& log, const std::optional<std::string>& error = std::nullopt);
void write_run_log(const std::filesystem::path& path, const TrainingLog& log,
                   const std::optional<std::string>& error = std::nullopt);

struct ParsedRunLog {
  std::vector<LogRow> rows;
  std::optional<std::string> error;
};

/// Rejects a header that differs from kRunLogHeader, rows with the wrong
/// number of cells, unparseable numbers and non-increasing timesteps.
ParsedRunLog parse_run_log(std::string_view text);
ParsedRunLog read_run_log(const std::filesystem::path& path);

/// A cell of a Pareto table. `warning` rows stand for grid cells without any
/// completed run; their numeric columns are empty and n_seeds is 0.
struct ParetoRow {
  std::string label;
  std::string interval;
  std::optional<ParetoPoint> point;
};

std::string format_pareto_csv(const std::vector<ParetoRow>& rows);
void write_pareto_csv(const std::filesystem::path& path, const std::vector<ParetoRow>& rows);
std::vector<ParetoRow> parse_pareto_csv(std::string_view text);
std::vector<ParetoRow> read_pareto_csv(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
/// Writes through a temporary file and renames, so readers never see a partial file.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace gsde
