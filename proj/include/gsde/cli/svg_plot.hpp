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

#include <string>
#include <vector>

#include "gsde/algos/training_log.hpp"
#include "gsde/cli/run_log.hpp"

namespace gsde {

/// All seeds of one configuration; each entry is one run's rows.
struct CurveSeries {
  std::string label;
  std::vector<std::vector<LogRow>> runs;
};

/// Mean evaluation return vs. timestep with a +-1 standard-error band across
/// runs. Throws std::invalid_argument when no run has an evaluation row.
std::string render_curve_svg(const std::vector<CurveSeries>& series);

struct ParetoPanel {
  std::string title;  // task name
  std::vector<ParetoRow> rows;
};

/// One scatter panel per task (train continuity cost vs. normalised return,
/// with error bars) followed by a macro-average panel over the labels that
/// appear in every task. Throws std::invalid_argument on empty input.
std::string render_pareto_svg(const std::vector<ParetoPanel>& panels);

}  // namespace gsde
