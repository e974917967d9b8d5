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

#include "gsde/algos/noise_type.hpp"

#include <stdexcept>

namespace gsde {

std::string to_string(NoiseType noise) {
  switch (noise) {
    case NoiseType::kNone: return "none";
    case NoiseType::kGaussian: return "gaussian";
    case NoiseType::kOu: return "ou";
    case NoiseType::kParam: return "param";
    case NoiseType::kGsde: return "gsde";
  }
  return "unknown";
}

NoiseType parse_noise_type(std::string_view text) {
  if (text == "none") return NoiseType::kNone;
  if (text == "gaussian") return NoiseType::kGaussian;
  if (text == "ou") return NoiseType::kOu;
  if (text == "param") return NoiseType::kParam;
  if (text == "gsde") return NoiseType::kGsde;
  throw std::invalid_argument("unknown noise type '" + std::string(text) + "'");
}

}  // namespace gsde
