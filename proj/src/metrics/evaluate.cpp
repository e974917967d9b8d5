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

#include "gsde/metrics/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gsde/metrics/continuity.hpp"
#include "gsde/random.hpp"

namespace gsde {

MeanSe mean_and_standard_error(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("mean_and_standard_error: no values");
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  MeanSe out;
  out.mean = sum / n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.se = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  }
  return out;
}

EvalReport evaluate_policy(const Policy& policy, Env& env, std::size_t episodes, std::uint64_t seed) {
  if (episodes == 0) throw std::invalid_argument("evaluate_policy: need at least one episode");
  Rng seeds(seed);
  std::vector<double> returns;
  std::vector<double> costs;
  for (std::size_t e = 0; e < episodes; ++e) {
    auto obs = env.reset(seeds.next_u64());
    Trajectory traj = Trajectory::symmetric(env.action_dim(), 1.0);
    double total = 0.0;
    while (!env.finished()) {
      auto action = clip_action(policy.deterministic_action(obs), 1.0);
      StepResult r = env.step_normalized(action);
      traj.actions.push_back(std::move(action));
      total += r.reward;
      obs = std::move(r.observation);
      if (r.done()) break;
    }
    returns.push_back(total);
    if (traj.actions.size() >= 2) costs.push_back(continuity_cost(traj));
  }
  const MeanSe ret = mean_and_standard_error(returns);
  EvalReport report;
  report.mean_return = ret.mean;
  report.se_return = ret.se;
  report.mean_continuity = costs.empty() ? 0.0 : mean_and_standard_error(costs).mean;
  report.episodes = episodes;
  return report;
}

}  // namespace gsde
