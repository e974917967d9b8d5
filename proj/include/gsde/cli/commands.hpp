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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gsde/algos/training_log.hpp"
#include "gsde/cli/config.hpp"

namespace gsde {

struct SeedOutcome {
  std::uint64_t seed = 0;
  std::filesystem::path directory;  // holds log.csv and checkpoint.bin
  TrainingLog log;
  std::optional<std::string> error;
};

/// Trains one seed and writes <run_dir>/seed_<seed>/{log.csv, checkpoint.bin}.
SeedOutcome run_seed(const ExperimentConfig& config, std::uint64_t seed, const std::filesystem::path& run_dir);

/// <output root>/<output.name>
std::filesystem::path run_directory(const ExperimentConfig& config);

/// One run per seed (up to `jobs` at a time) plus the resolved config.txt.
/// Returns 0 when every seed finished, 1 if any diverged.
int cmd_train(const ExperimentConfig& config, std::ostream& out, std::size_t jobs = 1);

/// Deterministic evaluation of a saved checkpoint, printed as a one-row CSV.
int cmd_eval(const std::filesystem::path& checkpoint, const ExperimentConfig& config, std::ostream& out);

/// Runs the noise x interval grid and writes <run dir>/pareto.csv. gSDE rows
/// are ordered by interval (episodic last); other noise types form a single
/// cell each. Returns 1 if any run failed.
int cmd_sweep(const ExperimentConfig& config, const std::vector<std::string>& noises,
              const std::vector<std::string>& intervals, std::ostream& out, std::size_t jobs = 1);

/// kind is "curve" (run logs) or "pareto" (sweep tables). Nothing is written
/// when the inputs hold no data.
int cmd_plot(const std::string& kind, const std::vector<std::filesystem::path>& inputs,
             const std::filesystem::path& output);

}  // namespace gsde
