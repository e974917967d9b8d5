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
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "gsde/distributions/gaussian.hpp"
#include "gsde/nn/matrix.hpp"
#include "gsde/random.hpp"

namespace gsde {

/// Map from the learnable log-parameter to the noise scale sigma.
enum class VarianceTransform { kExp, kExpln };

/// exp(x) for x <= 0, log(x + 1) + 1 for x > 0.
double expln(double x);
double apply_variance_transform(double log_sigma, VarianceTransform transform);
double variance_transform_derivative(double log_sigma, VarianceTransform transform);
Matrix sigma_matrix(const Matrix& log_sigma, VarianceTransform transform);

/// Number of environment steps between noise-matrix draws. `episodic()`
/// never triggers on its own; the owner resamples at episode starts.
class SampleInterval {
 public:
  explicit SampleInterval(std::size_t steps);
  static SampleInterval episodic() { return SampleInterval(); }

  std::size_t steps() const noexcept { return steps_; }
  bool is_episodic() const noexcept { return steps_ == kEpisodic; }
  std::string label() const;

  bool operator==(const SampleInterval&) const = default;
  auto operator<=>(const SampleInterval&) const = default;

 private:
  static constexpr std::size_t kEpisodic = std::numeric_limits<std::size_t>::max();
  SampleInterval() : steps_(kEpisodic) {}
  std::size_t steps_;
};

/// Per-dimension std of the induced action distribution:
/// std_j = sqrt(sum_i (t(log_sigma_ij) * z_i)^2). Not floored.
std::vector<double> gsde_std(const Matrix& log_sigma, std::span<const double> features, VarianceTransform transform);
/// Same, from an already transformed sigma matrix.
std::vector<double> gsde_std_from_sigma(const Matrix& sigma, std::span<const double> features);
/// Batched version: `latent` is (batch x latent_dim), result (batch x action_dim).
Matrix gsde_std_batch(const Matrix& sigma, const Matrix& latent);

/// Exploration noise theta_eps^T z.
std::vector<double> gsde_noise(const Matrix& theta_eps, std::span<const double> features);
/// mean + theta_eps^T z.
std::vector<double> gsde_action(std::span<const double> mean, const Matrix& theta_eps,
                                std::span<const double> features);

inline LogProb gsde_log_prob(std::span<const double> action, std::span<const double> mean,
                             std::span<const double> stddev) {
  return gaussian_log_prob(action, mean, stddev);
}

/// Closed-form d log pi(a|s) / d sigma_ij for the linear-in-features noise,
/// with features treated as constants. Columns whose std sits at the floor
/// are zero.
Matrix grad_log_prob_sigma(std::span<const double> action, std::span<const double> mean,
                           std::span<const double> features, const Matrix& sigma);
/// The closed form chained through d sigma / d log_sigma.
Matrix grad_log_prob_log_sigma(std::span<const double> action, std::span<const double> mean,
                               std::span<const double> features, const Matrix& log_sigma,
                               VarianceTransform transform);
/// Same gradient obtained by recording log pi on a scalar reverse-mode tape.
Matrix grad_log_prob_log_sigma_tape(std::span<const double> action, std::span<const double> mean,
                                    std::span<const double> features, const Matrix& log_sigma,
                                    VarianceTransform transform);

/// Draws theta_eps_ij ~ N(0, sigma_ij^2) independently, in row-major order.
Matrix sample_noise_matrix(const Matrix& sigma, Rng& rng);

/// State-dependent exploration with a noise matrix that is redrawn every
/// `interval` environment steps.
class GsdeDistribution {
 public:
  GsdeDistribution(Matrix log_sigma, SampleInterval interval, VarianceTransform transform);

  const Matrix& log_sigma() const noexcept { return log_sigma_; }
  Matrix& log_sigma() noexcept { return log_sigma_; }
  const Matrix& theta_eps() const noexcept { return theta_eps_; }
  SampleInterval interval() const noexcept { return interval_; }
  VarianceTransform transform() const noexcept { return transform_; }
  std::size_t steps_since_resample() const noexcept { return steps_since_resample_; }
  std::size_t latent_dim() const noexcept { return log_sigma_.rows(); }
  std::size_t action_dim() const noexcept { return log_sigma_.cols(); }

  Matrix sigma() const { return sigma_matrix(log_sigma_, transform_); }

  /// Fresh noise matrix; resets the step counter.
  const Matrix& resample(Rng& rng);
  bool resample_due() const noexcept { return steps_since_resample_ >= interval_.steps(); }
  /// Resamples first if due, then returns mean + theta_eps^T z and counts one step.
  std::vector<double> step(std::span<const double> mean, std::span<const double> features, Rng& rng);

  std::vector<double> act(std::span<const double> mean, std::span<const double> features) const {
    return gsde_action(mean, theta_eps_, features);
  }
  std::vector<double> stddev(std::span<const double> features) const {
    return gsde_std(log_sigma_, features, transform_);
  }

  /// Restores a previously recorded noise state (checkpoint loading).
  void restore(Matrix theta_eps, std::size_t steps_since_resample);

 private:
  Matrix log_sigma_;
  Matrix theta_eps_;
  SampleInterval interval_;
  VarianceTransform transform_;
  std::size_t steps_since_resample_;
};

/// Free-function form of GsdeDistribution::resample.
inline const Matrix& resample_noise(GsdeDistribution& dist, Rng& rng) { return dist.resample(rng); }

}  // namespace gsde
