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

#include <span>
#include <vector>

namespace gsde {

inline constexpr double kSquashEpsilon = 1e-6;

struct SquashedSample {
  std::vector<double> pre_squash;
  std::vector<double> action;  // tanh(pre_squash), strictly inside (-1, 1)
  double log_prob = 0.0;
};

/// sum_j log(1 - tanh(u_j)^2 + epsilon): the log-Jacobian of the tanh squash.
double squash_log_jacobian(std::span<const double> u, double epsilon = kSquashEpsilon);

/// sum_j 2 (log 2 - u_j - softplus(-2 u_j)), the epsilon-free log-Jacobian in
/// a form that stays accurate for large |u|.
double squash_log_jacobian_stable(std::span<const double> u);

/// Applies tanh and corrects a Gaussian log-density for the change of variables.
SquashedSample squash_correct(std::span<const double> u, double gaussian_logp);

double softplus(double x);

}  // namespace gsde
