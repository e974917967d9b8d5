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

#include "gsde/random.hpp"

#include <sstream>

#include "gsde/error.hpp"

namespace gsde {

std::string Rng::serialize() const {
  std::ostringstream out;
  out.precision(17);
  out << engine_ << ' ' << normal_;
  return out.str();
}

void Rng::deserialize(std::string_view state) {
  std::istringstream in{std::string(state)};
  in >> engine_ >> normal_;
  if (!in) throw std::runtime_error("malformed rng state");
}

}  // namespace gsde
