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

#include <string>
#include <string_view>

namespace gsde {

/// Exploration strategy used while collecting experience.
enum class NoiseType { kNone, kGaussian, kOu, kParam, kGsde };

std::string to_string(NoiseType noise);
/// Accepts "none", "gaussian", "ou", "param", "gsde".
NoiseType parse_noise_type(std::string_view text);

}  // namespace gsde
