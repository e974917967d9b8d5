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

#include "gsde/distributions/squash.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gsde {

double softplus(double x) { return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

double squash_log_jacobian(std::span<const double> u, double epsilon) {
  double sum = 0.0;
  for (double v : u) {
    const double t = std::tanh(v);
    sum += std::log(1.0 - t * t + epsilon);
  }
  return sum;
}

double squash_log_jacobian_stable(std::span<const double> u) {
  double sum = 0.0;
  for (double v : u) sum += 2.0 * (std::numbers::ln2 - v - softplus(-2.0 * v));
  return sum;
}

SquashedSample squash_correct(std::span<const double> u, double gaussian_logp) {
  SquashedSample out;
  out.pre_squash.assign(u.begin(), u.end());
  out.action.resize(u.size());
  const double edge = std::nextafter(1.0, 0.0);
  for (std::size_t j = 0; j < u.size(); ++j) out.action[j] = std::clamp(std::tanh(u[j]), -edge, edge);
  out.log_prob = gaussian_logp - squash_log_jacobian(u);
  return out;
}

}  // namespace gsde
