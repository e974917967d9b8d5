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

#include "gsde/distributions/gsde.hpp"

#include <cmath>
#include <numbers>

#include "../nn/eigen_map.hpp"
#include "gsde/error.hpp"
#include "gsde/nn/tape.hpp"

namespace gsde {

double expln(double x) { return x <= 0.0 ? std::exp(x) : std::log1p(x) + 1.0; }

double apply_variance_transform(double log_sigma, VarianceTransform transform) {
  return transform == VarianceTransform::kExp ? std::exp(log_sigma) : expln(log_sigma);
}

double variance_transform_derivative(double log_sigma, VarianceTransform transform) {
  if (transform == VarianceTransform::kExp || log_sigma <= 0.0) return std::exp(log_sigma);
  return 1.0 / (log_sigma + 1.0);
}

Matrix sigma_matrix(const Matrix& log_sigma, VarianceTransform transform) {
  Matrix sigma(log_sigma.rows(), log_sigma.cols());
  auto src = log_sigma.data();
  auto dst = sigma.data();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = apply_variance_transform(src[i], transform);
  return sigma;
}

SampleInterval::SampleInterval(std::size_t steps) : steps_(steps) {
  if (steps == 0) throw std::invalid_argument("gsde interval must be >= 1");
}

std::string SampleInterval::label() const { return is_episodic() ? "episodic" : std::to_string(steps_); }

std::vector<double> gsde_std_from_sigma(const Matrix& sigma, std::span<const double> features) {
  if (features.size() != sigma.rows()) throw ShapeError("gsde_std: feature length != sigma rows");
  std::vector<double> var(sigma.cols(), 0.0);
  for (std::size_t i = 0; i < sigma.rows(); ++i) {
    const double z2 = features[i] * features[i];
    auto row = sigma.row(i);
    for (std::size_t j = 0; j < sigma.cols(); ++j) var[j] += row[j] * row[j] * z2;
  }
  for (double& v : var) v = std::sqrt(v);
  return var;
}

std::vector<double> gsde_std(const Matrix& log_sigma, std::span<const double> features, VarianceTransform transform) {
  return gsde_std_from_sigma(sigma_matrix(log_sigma, transform), features);
}

Matrix gsde_std_batch(const Matrix& sigma, const Matrix& latent) {
  if (latent.cols() != sigma.rows()) throw ShapeError("gsde_std_batch: latent width != sigma rows");
  Matrix out(latent.rows(), sigma.cols());
  detail::map(out).noalias() = detail::map(latent).array().square().matrix() * detail::map(sigma).array().square().matrix();
  for (double& v : out.data()) v = std::sqrt(v);
  return out;
}

std::vector<double> gsde_noise(const Matrix& theta_eps, std::span<const double> features) {
  if (features.size() != theta_eps.rows()) throw ShapeError("gsde_noise: feature length != noise rows");
  std::vector<double> eps(theta_eps.cols(), 0.0);
  for (std::size_t i = 0; i < theta_eps.rows(); ++i) {
    auto row = theta_eps.row(i);
    for (std::size_t j = 0; j < theta_eps.cols(); ++j) eps[j] += row[j] * features[i];
  }
  return eps;
}

std::vector<double> gsde_action(std::span<const double> mean, const Matrix& theta_eps,
                                std::span<const double> features) {
  if (mean.size() != theta_eps.cols()) throw ShapeError("gsde_action: mean length != action dim");
  auto action = gsde_noise(theta_eps, features);
  for (std::size_t j = 0; j < action.size(); ++j) action[j] = mean[j] + action[j];
  return action;
}

Matrix grad_log_prob_sigma(std::span<const double> action, std::span<const double> mean,
                           std::span<const double> features, const Matrix& sigma) {
  if (action.size() != sigma.cols() || mean.size() != sigma.cols()) {
    throw ShapeError("grad_log_prob_sigma: action/mean length != action dim");
  }
  const auto std_hat = gsde_std_from_sigma(sigma, features);
  Matrix grad(sigma.rows(), sigma.cols());
  for (std::size_t j = 0; j < sigma.cols(); ++j) {
    const double s = std_hat[j];
    if (!(s >= kMinStd)) continue;
    const double d = action[j] - mean[j];
    const double outer = (d * d - s * s) / (s * s * s);
    for (std::size_t i = 0; i < sigma.rows(); ++i) {
      grad(i, j) = outer * features[i] * features[i] * sigma(i, j) / s;
    }
  }
  return grad;
}

Matrix grad_log_prob_log_sigma(std::span<const double> action, std::span<const double> mean,
                               std::span<const double> features, const Matrix& log_sigma,
                               VarianceTransform transform) {
  Matrix grad = grad_log_prob_sigma(action, mean, features, sigma_matrix(log_sigma, transform));
  auto g = grad.data();
  auto l = log_sigma.data();
  for (std::size_t k = 0; k < g.size(); ++k) g[k] *= variance_transform_derivative(l[k], transform);
  return grad;
}

Matrix grad_log_prob_log_sigma_tape(std::span<const double> action, std::span<const double> mean,
                                    std::span<const double> features, const Matrix& log_sigma,
                                    VarianceTransform transform) {
  const std::size_t rows = log_sigma.rows();
  const std::size_t cols = log_sigma.cols();
  if (features.size() != rows || action.size() != cols || mean.size() != cols) {
    throw ShapeError("grad_log_prob_log_sigma_tape: dimension mismatch");
  }
  ad::Tape tape;
  std::vector<ad::Var> leaves;
  leaves.reserve(rows * cols);
  for (double l : log_sigma.data()) leaves.push_back(tape.variable(l));

  auto sigma_of = [&](ad::Var l) -> ad::Var {
    if (transform == VarianceTransform::kExp || l.value() <= 0.0) return ad::exp(l);
    return ad::log(l + 1.0) + 1.0;
  };

  const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
  ad::Var total = tape.constant(0.0);
  for (std::size_t j = 0; j < cols; ++j) {
    ad::Var var = tape.constant(0.0);
    for (std::size_t i = 0; i < rows; ++i) {
      var = var + ad::square(sigma_of(leaves[i * cols + j]) * features[i]);
    }
    ad::Var s = ad::max(ad::sqrt(var), kMinStd);
    const double d = action[j] - mean[j];
    ad::Var term = (-0.5 * d * d) / ad::square(s) - ad::log(s);
    total = total + term - half_log_2pi;
  }
  const auto adjoint = tape.gradient(total);
  Matrix grad(rows, cols);
  for (std::size_t k = 0; k < leaves.size(); ++k) grad.data()[k] = adjoint[leaves[k].index()];
  return grad;
}

Matrix sample_noise_matrix(const Matrix& sigma, Rng& rng) {
  Matrix theta(sigma.rows(), sigma.cols());
  auto s = sigma.data();
  auto t = theta.data();
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = s[k] * rng.normal();
  return theta;
}

GsdeDistribution::GsdeDistribution(Matrix log_sigma, SampleInterval interval, VarianceTransform transform)
    : log_sigma_(std::move(log_sigma)),
      theta_eps_(log_sigma_.rows(), log_sigma_.cols()),
      interval_(interval),
      transform_(transform),
      steps_since_resample_(interval.steps()) {}

const Matrix& GsdeDistribution::resample(Rng& rng) {
  theta_eps_ = sample_noise_matrix(sigma(), rng);
  steps_since_resample_ = 0;
  return theta_eps_;
}

std::vector<double> GsdeDistribution::step(std::span<const double> mean, std::span<const double> features, Rng& rng) {
  if (resample_due()) resample(rng);
  ++steps_since_resample_;
  return act(mean, features);
}

void GsdeDistribution::restore(Matrix theta_eps, std::size_t steps_since_resample) {
  if (theta_eps.rows() != log_sigma_.rows() || theta_eps.cols() != log_sigma_.cols()) {
    throw ShapeError("GsdeDistribution::restore: noise matrix shape mismatch");
  }
  theta_eps_ = std::move(theta_eps);
  steps_since_resample_ = steps_since_resample;
}

}  // namespace gsde
