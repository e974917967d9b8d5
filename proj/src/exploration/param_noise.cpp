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

#include "gsde/exploration/param_noise.hpp"

#include <cmath>
#include <stdexcept>

#include "gsde/error.hpp"

namespace gsde {

Mlp perturb_params(const Mlp& net, double stddev, Rng& rng) {
  if (!(stddev >= 0.0)) throw std::invalid_argument("perturb_params: stddev must be >= 0");
  Mlp out = net;
  for (auto tensor : out.parameters()) {
    for (double& w : tensor) w += stddev * rng.normal();
  }
  return out;
}

double action_distance(const Mlp& net, const Mlp& perturbed, const Matrix& states, std::size_t action_dim) {
  if (states.rows() == 0) throw std::invalid_argument("action_distance: empty state batch");
  if (action_dim == 0 || action_dim > net.output_dim() || action_dim > perturbed.output_dim()) {
    throw ShapeError("action_distance: action_dim exceeds network output");
  }
  const Matrix a = mlp_predict(net, states);
  const Matrix b = mlp_predict(perturbed, states);
  double sum = 0.0;
  for (std::size_t r = 0; r < states.rows(); ++r) {
    for (std::size_t c = 0; c < action_dim; ++c) {
      const double d = a(r, c) - b(r, c);
      sum += d * d;
    }
  }
  return std::sqrt(sum / static_cast<double>(states.rows() * action_dim));
}

double action_distance(const Mlp& net, const Mlp& perturbed, const Matrix& states) {
  return action_distance(net, perturbed, states, net.output_dim());
}

double adapt_param_noise(ParamNoise& noise, double measured_distance) {
  if (!(measured_distance >= 0.0)) throw std::invalid_argument("adapt_param_noise: distance must be >= 0");
  if (measured_distance < noise.target_distance) {
    noise.stddev *= noise.adaptation_factor;
  } else {
    noise.stddev /= noise.adaptation_factor;
  }
  return noise.stddev;
}

}  // namespace gsde
