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
#include <span>
#include <vector>

#include "gsde/nn/matrix.hpp"
#include "gsde/random.hpp"

namespace gsde {

enum class Activation { kReLU, kTanh, kIdentity };

/// One affine layer y = act(W x + b). `weight` is (out x in).
struct DenseLayer {
  Matrix weight;
  std::vector<double> bias;
  Activation activation = Activation::kIdentity;

  std::size_t in_dim() const noexcept { return weight.cols(); }
  std::size_t out_dim() const noexcept { return weight.rows(); }
  bool operator==(const DenseLayer&) const = default;
};

/// Feed-forward network whose last layer is linear. The post-activation of
/// the last hidden layer is the latent feature vector; the output is the
/// final linear map applied to it. A single-layer net has the input as latent.
class Mlp {
 public:
  Mlp() = default;
  explicit Mlp(std::vector<DenseLayer> layers);
  /// Uniform fan-in initialisation in [-1/sqrt(fan_in), 1/sqrt(fan_in)].
  Mlp(std::size_t input_dim, std::span<const std::size_t> hidden, std::size_t output_dim,
      Activation hidden_activation, Rng& rng);

  std::size_t input_dim() const noexcept { return layers_.front().in_dim(); }
  std::size_t output_dim() const noexcept { return layers_.back().out_dim(); }
  std::size_t latent_dim() const noexcept { return layers_.back().in_dim(); }
  std::size_t depth() const noexcept { return layers_.size(); }

  const std::vector<DenseLayer>& layers() const noexcept { return layers_; }
  std::vector<DenseLayer>& layers() noexcept { return layers_; }

  /// Parameter views in a fixed order: W0, b0, W1, b1, ...
  std::vector<std::span<double>> parameters();
  std::vector<std::span<const double>> parameters() const;
  std::size_t parameter_count() const;

  bool operator==(const Mlp&) const = default;

 private:
  std::vector<DenseLayer> layers_;
};

/// Cached intermediate values of one batched forward pass.
struct ForwardTape {
  Matrix input;
  std::vector<Matrix> pre;   // per layer, before activation
  std::vector<Matrix> post;  // per layer, after activation
};

struct ForwardPass {
  ForwardTape tape;

  const Matrix& output() const { return tape.post.back(); }
  const Matrix& latent() const {
    return tape.post.size() > 1 ? tape.post[tape.post.size() - 2] : tape.input;
  }
};

/// Gradients in the same layout as Mlp::parameters(), plus the input gradient.
struct MlpGradients {
  std::vector<Matrix> weight;
  std::vector<std::vector<double>> bias;
  Matrix input;

  std::vector<std::span<double>> spans();
  std::vector<std::span<const double>> spans() const;
};

/// Batched forward pass; `input` is (batch x input_dim).
ForwardPass mlp_forward(const Mlp& net, const Matrix& input);
/// Forward pass without recording a tape.
Matrix mlp_predict(const Mlp& net, const Matrix& input);

/// Reverse pass for a scalar loss with dL/d(output) = `d_output`.
MlpGradients mlp_backward(const Mlp& net, const ForwardTape& tape, const Matrix& d_output);
/// As above, with an additional gradient arriving directly at the latent features.
MlpGradients mlp_backward(const Mlp& net, const ForwardTape& tape, const Matrix& d_output,
                          const Matrix& d_latent);

}  // namespace gsde
