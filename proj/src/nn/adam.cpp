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

#include "gsde/nn/adam.hpp"

#include <cmath>
#include <stdexcept>

#include "gsde/error.hpp"

namespace gsde {

AdamState make_adam_state(std::span<const std::span<const double>> params, AdamConfig config) {
  AdamState state;
  state.config = config;
  for (const auto& p : params) {
    state.first_moment.emplace_back(p.size(), 0.0);
    state.second_moment.emplace_back(p.size(), 0.0);
  }
  return state;
}

AdamState make_adam_state(std::span<const std::span<double>> params, AdamConfig config) {
  return make_adam_state(as_const(params), config);
}

void adam_step(std::span<const std::span<double>> params, std::span<const std::span<const double>> grads,
               AdamState& state) {
  if (params.size() != grads.size() || params.size() != state.first_moment.size()) {
    throw ShapeError("adam: parameter, gradient and moment lists differ in length");
  }
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (params[k].size() != grads[k].size() || params[k].size() != state.first_moment[k].size()) {
      throw ShapeError("adam: tensor " + std::to_string(k) + " shape mismatch");
    }
    for (double g : grads[k]) {
      if (!std::isfinite(g)) throw NonFiniteError("adam: non-finite gradient in tensor " + std::to_string(k));
    }
  }

  const auto& cfg = state.config;
  state.step += 1;
  const double t = static_cast<double>(state.step);
  const double bias1 = 1.0 - std::pow(cfg.beta1, t);
  const double bias2 = 1.0 - std::pow(cfg.beta2, t);
  for (std::size_t k = 0; k < params.size(); ++k) {
    auto p = params[k];
    auto g = grads[k];
    auto& m = state.first_moment[k];
    auto& v = state.second_moment[k];
    for (std::size_t i = 0; i < p.size(); ++i) {
      m[i] = cfg.beta1 * m[i] + (1.0 - cfg.beta1) * g[i];
      v[i] = cfg.beta2 * v[i] + (1.0 - cfg.beta2) * g[i] * g[i];
      const double m_hat = m[i] / bias1;
      const double v_hat = v[i] / bias2;
      p[i] -= cfg.learning_rate * m_hat / (std::sqrt(v_hat) + cfg.epsilon);
    }
  }
}

double global_norm(std::span<const std::span<const double>> grads) {
  double sum = 0.0;
  for (const auto& g : grads) {
    for (double v : g) sum += v * v;
  }
  return std::sqrt(sum);
}

double clip_grad_norm(std::span<const std::span<double>> grads, double max_norm) {
  if (!(max_norm > 0.0)) throw std::invalid_argument("clip_grad_norm: max_norm must be positive");
  const double norm = global_norm(as_const(grads));
  if (norm > max_norm) {
    const double scale = max_norm / norm;
    for (const auto& g : grads) {
      for (double& v : g) v *= scale;
    }
  }
  return norm;
}

void soft_update(std::span<const std::span<const double>> online, std::span<const std::span<double>> target,
                 double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) throw std::invalid_argument("soft_update: tau must lie in [0, 1]");
  if (online.size() != target.size()) throw ShapeError("soft_update: tensor count mismatch");
  for (std::size_t k = 0; k < online.size(); ++k) {
    if (online[k].size() != target[k].size()) throw ShapeError("soft_update: tensor shape mismatch");
    for (std::size_t i = 0; i < online[k].size(); ++i) {
      target[k][i] = tau * online[k][i] + (1.0 - tau) * target[k][i];
    }
  }
}

std::vector<std::span<const double>> as_const(std::span<const std::span<double>> spans) {
  return {spans.begin(), spans.end()};
}

}  // namespace gsde
