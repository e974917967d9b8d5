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

#include "gsde/distributions/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gsde/error.hpp"

namespace gsde {

namespace {
const double kHalfLog2Pi = 0.5 * std::log(2.0 * std::numbers::pi);
}

LogProb gaussian_log_prob(std::span<const double> x, std::span<const double> mean, std::span<const double> stddev) {
  if (x.size() != mean.size() || x.size() != stddev.size()) throw ShapeError("gaussian_log_prob: dimension mismatch");
  LogProb out;
  for (std::size_t j = 0; j < x.size(); ++j) {
    double s = stddev[j];
    if (!(s >= kMinStd)) {
      s = kMinStd;
      ++out.floored;
    }
    const double d = x[j] - mean[j];
    out.value += -(d * d) / (2.0 * s * s) - std::log(s) - kHalfLog2Pi;
  }
  return out;
}

double gaussian_entropy(std::span<const double> stddev) {
  double h = 0.0;
  for (double s : stddev) h += 0.5 + kHalfLog2Pi + std::log(std::max(s, kMinStd));
  return h;
}

double sampled_entropy(std::span<const double> log_probs) {
  if (log_probs.empty()) throw std::invalid_argument("sampled_entropy: no samples");
  double sum = 0.0;
  for (double lp : log_probs) sum += lp;
  return -sum / static_cast<double>(log_probs.size());
}

DiagGaussian::DiagGaussian(std::vector<double> mean, std::vector<double> log_std)
    : mean_(std::move(mean)), log_std_(std::move(log_std)) {
  if (mean_.size() != log_std_.size()) throw ShapeError("DiagGaussian: mean and log_std differ in length");
  for (double& l : log_std_) l = std::clamp(l, kLogStdMin, kLogStdMax);
}

std::vector<double> DiagGaussian::stddev() const {
  std::vector<double> s(log_std_.size());
  std::transform(log_std_.begin(), log_std_.end(), s.begin(), [](double l) { return std::exp(l); });
  return s;
}

std::vector<double> DiagGaussian::sample(Rng& rng) const {
  std::vector<double> x(mean_.size());
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = mean_[j] + std::exp(log_std_[j]) * rng.normal();
  return x;
}

LogProb DiagGaussian::log_prob(std::span<const double> x) const { return gaussian_log_prob(x, mean_, stddev()); }

double DiagGaussian::entropy() const { return gaussian_entropy(stddev()); }

}  // namespace gsde
