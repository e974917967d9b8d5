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

#include "gsde/nn/mlp.hpp"

#include <cmath>
#include <string>

#include "eigen_map.hpp"
#include "gsde/error.hpp"

namespace gsde {

namespace {

void apply_activation(Activation act, const Matrix& pre, Matrix& post) {
  auto src = pre.data();
  auto dst = post.data();
  switch (act) {
    case Activation::kReLU:
      for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] > 0.0 ? src[i] : 0.0;
      break;
    case Activation::kTanh:
      for (std::size_t i = 0; i < src.size(); ++i) dst[i] = std::tanh(src[i]);
      break;
    case Activation::kIdentity:
      std::copy(src.begin(), src.end(), dst.begin());
      break;
  }
}

// d_pre = d_post * act'(pre), in place on d_post.
void activation_backward(Activation act, const Matrix& pre, const Matrix& post, Matrix& grad) {
  auto g = grad.data();
  switch (act) {
    case Activation::kReLU: {
      auto p = pre.data();
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (p[i] <= 0.0) g[i] = 0.0;
      }
      break;
    }
    case Activation::kTanh: {
      auto y = post.data();
      for (std::size_t i = 0; i < g.size(); ++i) g[i] *= 1.0 - y[i] * y[i];
      break;
    }
    case Activation::kIdentity:
      break;
  }
}

void affine(const DenseLayer& layer, const Matrix& in, Matrix& out) {
  out = Matrix(in.rows(), layer.out_dim());
  auto y = detail::map(out);
  y.noalias() = detail::map(in) * detail::map(layer.weight).transpose();
  const Eigen::Map<const Eigen::RowVectorXd> b(layer.bias.data(), layer.bias.size());
  y.rowwise() += b;
}

void check_input(const Mlp& net, const Matrix& input) {
  if (input.cols() != net.input_dim()) {
    throw ShapeError("mlp input width " + std::to_string(input.cols()) + " != " +
                     std::to_string(net.input_dim()));
  }
}

}  // namespace

Mlp::Mlp(std::vector<DenseLayer> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) throw ShapeError("mlp needs at least one layer");
  for (std::size_t k = 0; k < layers_.size(); ++k) {
    const auto& l = layers_[k];
    if (l.bias.size() != l.out_dim()) throw ShapeError("bias length mismatch in layer " + std::to_string(k));
    if (k > 0 && l.in_dim() != layers_[k - 1].out_dim()) {
      throw ShapeError("layer " + std::to_string(k) + " input does not chain with previous output");
    }
  }
  if (layers_.back().activation != Activation::kIdentity) {
    throw ShapeError("final mlp layer must be linear");
  }
}

Mlp::Mlp(std::size_t input_dim, std::span<const std::size_t> hidden, std::size_t output_dim,
         Activation hidden_activation, Rng& rng) {
  std::size_t fan_in = input_dim;
  auto make = [&](std::size_t out, Activation act) {
    DenseLayer layer{Matrix(out, fan_in), std::vector<double>(out), act};
    const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    for (double& w : layer.weight.data()) w = rng.uniform(-bound, bound);
    for (double& b : layer.bias) b = rng.uniform(-bound, bound);
    layers_.push_back(std::move(layer));
    fan_in = out;
  };
  for (std::size_t width : hidden) make(width, hidden_activation);
  make(output_dim, Activation::kIdentity);
}

std::vector<std::span<double>> Mlp::parameters() {
  std::vector<std::span<double>> out;
  out.reserve(2 * layers_.size());
  for (auto& l : layers_) {
    out.emplace_back(l.weight.data());
    out.emplace_back(l.bias);
  }
  return out;
}

std::vector<std::span<const double>> Mlp::parameters() const {
  std::vector<std::span<const double>> out;
  out.reserve(2 * layers_.size());
  for (const auto& l : layers_) {
    out.emplace_back(l.weight.data());
    out.emplace_back(l.bias);
  }
  return out;
}

std::size_t Mlp::parameter_count() const {
  std::size_t n = 0;
  for (const auto& l : layers_) n += l.weight.size() + l.bias.size();
  return n;
}

std::vector<std::span<double>> MlpGradients::spans() {
  std::vector<std::span<double>> out;
  for (std::size_t k = 0; k < weight.size(); ++k) {
    out.emplace_back(weight[k].data());
    out.emplace_back(bias[k]);
  }
  return out;
}

std::vector<std::span<const double>> MlpGradients::spans() const {
  std::vector<std::span<const double>> out;
  for (std::size_t k = 0; k < weight.size(); ++k) {
    out.emplace_back(weight[k].data());
    out.emplace_back(bias[k]);
  }
  return out;
}

ForwardPass mlp_forward(const Mlp& net, const Matrix& input) {
  check_input(net, input);
  ForwardPass pass;
  auto& tape = pass.tape;
  tape.input = input;
  tape.pre.resize(net.depth());
  tape.post.resize(net.depth());
  for (std::size_t k = 0; k < net.depth(); ++k) {
    const auto& layer = net.layers()[k];
    affine(layer, k == 0 ? tape.input : tape.post[k - 1], tape.pre[k]);
    tape.post[k] = Matrix(tape.pre[k].rows(), tape.pre[k].cols());
    apply_activation(layer.activation, tape.pre[k], tape.post[k]);
  }
  return pass;
}

Matrix mlp_predict(const Mlp& net, const Matrix& input) {
  check_input(net, input);
  Matrix current = input;
  Matrix next;
  for (const auto& layer : net.layers()) {
    affine(layer, current, next);
    if (layer.activation != Activation::kIdentity) apply_activation(layer.activation, next, next);
    std::swap(current, next);
  }
  return current;
}

MlpGradients mlp_backward(const Mlp& net, const ForwardTape& tape, const Matrix& d_output) {
  return mlp_backward(net, tape, d_output, Matrix());
}

MlpGradients mlp_backward(const Mlp& net, const ForwardTape& tape, const Matrix& d_output,
                          const Matrix& d_latent) {
  const std::size_t depth = net.depth();
  if (tape.pre.size() != depth || tape.post.size() != depth || tape.input.cols() != net.input_dim()) {
    throw ShapeError("forward tape does not match network");
  }
  for (std::size_t k = 0; k < depth; ++k) {
    if (tape.pre[k].cols() != net.layers()[k].out_dim()) throw ShapeError("forward tape does not match network");
  }
  const std::size_t batch = tape.input.rows();
  if (d_output.rows() != batch || d_output.cols() != net.output_dim()) {
    throw ShapeError("upstream gradient shape does not match network output");
  }
  const bool has_latent = !d_latent.empty();
  if (has_latent && (d_latent.rows() != batch || d_latent.cols() != net.latent_dim())) {
    throw ShapeError("latent gradient shape does not match latent features");
  }

  MlpGradients grads;
  grads.weight.resize(depth);
  grads.bias.resize(depth);

  Matrix delta = d_output;
  for (std::size_t k = depth; k-- > 0;) {
    const auto& layer = net.layers()[k];
    activation_backward(layer.activation, tape.pre[k], tape.post[k], delta);
    const Matrix& in = k == 0 ? tape.input : tape.post[k - 1];

    grads.weight[k] = Matrix(layer.out_dim(), layer.in_dim());
    detail::map(grads.weight[k]).noalias() = detail::map(delta).transpose() * detail::map(in);
    // Row-by-row accumulation keeps the summation order independent of where
    // the bias buffer lands in memory.
    grads.bias[k].assign(layer.out_dim(), 0.0);
    for (std::size_t r = 0; r < batch; ++r) {
      const auto row = delta.row(r);
      for (std::size_t o = 0; o < row.size(); ++o) grads.bias[k][o] += row[o];
    }

    Matrix d_in(batch, layer.in_dim());
    detail::map(d_in).noalias() = detail::map(delta) * detail::map(layer.weight);
    if (k == depth - 1 && has_latent) detail::map(d_in) += detail::map(d_latent);
    delta = std::move(d_in);
  }
  grads.input = std::move(delta);
  return grads;
}

}  // namespace gsde
