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
#include <string>

#include "gsde/algos/ppo.hpp"
#include "gsde/algos/sac.hpp"
#include "gsde/seeding.hpp"

namespace gsde {

enum class CheckpointKind { kSac, kPpo };

/// Binary checkpoint: magic, format version, algorithm tag, then every
/// parameter tensor, optimizer moment, noise state and rng state. Doubles are
/// stored as raw host-order bytes, so loading is bit-exact on the same
/// platform. The replay buffer is not saved.
inline constexpr std::uint32_t kCheckpointVersion = 1;

void save_checkpoint(const std::filesystem::path& path, const SacAgent& agent, const SeedStreams& streams);
void save_checkpoint(const std::filesystem::path& path, const PpoAgent& agent, const SeedStreams& streams);

/// `agent` must have been built from the same configuration (shapes are
/// checked). Throws std::runtime_error on a malformed or mismatched file.
void load_checkpoint(const std::filesystem::path& path, SacAgent& agent, SeedStreams& streams);
void load_checkpoint(const std::filesystem::path& path, PpoAgent& agent, SeedStreams& streams);

CheckpointKind checkpoint_kind(const std::filesystem::path& path);

}  // namespace gsde
