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

#include <cstddef>

#include "gsde/nn/matrix.hpp"
#include "gsde/nn/mlp.hpp"
#include "gsde/random.hpp"

namespace gsde {

/// Adaptive parameter-space noise: the perturbation scale is grown or shrunk
/// so that the induced action distance tracks a target.
struct ParamNoise {
  double stddev = 0.2;
  double adaptation_factor = 1.01;
  double target_distance = 0.2;
};

/// Copy of `net` with independent N(0, stddev^2) noise added to every weight and bias.
Mlp perturb_params(const Mlp& net, double stddev, Rng& rng);

/// Root-mean-square difference between the first `action_dim` outputs of the
/// two nets over a batch of states.
double action_distance(const Mlp& net, const Mlp& perturbed, const Matrix& states, std::size_t action_dim);
double action_distance(const Mlp& net, const Mlp& perturbed, const Matrix& states);

/// Multiplies stddev by the factor when the measured distance is below
/// target, divides otherwise. Returns the new stddev.
double adapt_param_noise(ParamNoise& noise, double measured_distance);

}  // namespace gsde
