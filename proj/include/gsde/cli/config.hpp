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
#include <string>
#include <string_view>
#include <vector>

#include "gsde/algos/ppo.hpp"
#include "gsde/algos/sac.hpp"
#include "gsde/algos/training_log.hpp"
#include "gsde/envs/env.hpp"

namespace gsde {

enum class Algorithm { kSac, kPpo };

std::string to_string(Algorithm algo);

/// A fully resolved experiment description. Only the block matching
/// `algorithm` is meaningful; the other keeps its defaults.
struct ExperimentConfig {
  EnvSpec env;
  Algorithm algorithm = Algorithm::kSac;
  SacConfig sac;
  PpoConfig ppo;
  TrainSettings train{.total_steps = 50000};
  std::vector<std::uint64_t> seeds{0};
  std::string output_dir = "runs";
  std::string name = "run";

  NoiseType noise() const { return algorithm == Algorithm::kSac ? sac.noise : ppo.noise; }
  SampleInterval gsde_interval() const { return algorithm == Algorithm::kSac ? sac.gsde_interval : ppo.gsde_interval; }
  void set_noise(NoiseType noise);
  void set_gsde_interval(SampleInterval interval);
  /// "gsde-8", "gsde-episodic", "gaussian", ...
  std::string label() const;

  bool operator==(const ExperimentConfig&) const = default;
};

/// Flat `key = value` document, one entry per line, `#` starts a comment.
/// `algo.name` selects the default table; every other key is optional.
/// Unknown, duplicated, mistyped or out-of-range entries throw ConfigError
/// naming the key.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Every resolved key in a fixed order; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ExperimentConfig& config);

/// `GSDE_OUTPUT_ROOT` if set, otherwise `output.dir`.
std::filesystem::path output_root(const ExperimentConfig& config);

/// Parses "8" or "episodic".
SampleInterval parse_interval(std::string_view text);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

}  // namespace gsde
