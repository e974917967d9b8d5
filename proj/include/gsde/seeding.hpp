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
#include <string_view>

#include "gsde/random.hpp"

namespace gsde {

/// Stable 64-bit seed for the stream `name` under `master`.
std::uint64_t derive_seed(std::uint64_t master, std::string_view name);

inline Rng named_stream(std::uint64_t master, std::string_view name) { return Rng(derive_seed(master, name)); }

/// The independent random streams one training run draws from.
struct SeedStreams {
  std::uint64_t master = 0;
  Rng env;          // episode reset seeds
  Rng policy_init;  // network initialisation
  Rng noise;        // exploration noise, minibatch sampling
  Rng eval;         // evaluation episode seeds

  bool operator==(const SeedStreams&) const = default;
};

SeedStreams seed_streams(std::uint64_t master);

}  // namespace gsde
