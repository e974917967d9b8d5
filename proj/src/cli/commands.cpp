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

#include "gsde/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "gsde/algos/checkpoint.hpp"
#include "gsde/algos/ppo_train.hpp"
#include "gsde/algos/sac_train.hpp"
#include "gsde/cli/run_log.hpp"
#include "gsde/cli/svg_plot.hpp"
#include "gsde/metrics/pareto.hpp"
#include "gsde/seeding.hpp"

namespace gsde {
namespace {

/// Runs tasks[0..n) on up to `jobs` threads. Exceptions are collected per task.
void run_parallel(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& task,
                  std::vector<std::exception_ptr>& errors) {
  errors.assign(n, nullptr);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, n));
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

std::string describe(const std::exception_ptr& e) {
  try {
    std::rethrow_exception(e);
  } catch (const std::exception& ex) {
    return ex.what();
  } catch (...) {
    return "unknown error";
  }
}

std::string seed_dir_name(std::uint64_t seed) { return "seed_" + std::to_string(seed); }

}  // namespace

std::filesystem::path run_directory(const ExperimentConfig& config) { return output_root(config) / config.name; }

SeedOutcome run_seed(const ExperimentConfig& config, std::uint64_t seed, const std::filesystem::path& run_dir) {
  SeedOutcome outcome{seed, run_dir / seed_dir_name(seed)};
  std::filesystem::create_directories(outcome.directory);
  auto env = make_env(config.env);
  SeedStreams streams = seed_streams(seed);
  const auto checkpoint = outcome.directory / "checkpoint.bin";
  if (config.algorithm == Algorithm::kSac) {
    SacTrainResult r = sac_train(config.sac, config.train, *env, streams);
    outcome.log = std::move(r.log);
    outcome.error = std::move(r.error);
    save_checkpoint(checkpoint, r.agent, streams);
  } else {
    PpoTrainResult r = ppo_train(config.ppo, config.train, *env, streams);
    outcome.log = std::move(r.log);
    outcome.error = std::move(r.error);
    save_checkpoint(checkpoint, r.agent, streams);
  }
  write_run_log(outcome.directory / "log.csv", outcome.log, outcome.error);
  return outcome;
}

int cmd_train(const ExperimentConfig& config, std::ostream& out, std::size_t jobs) {
  const auto dir = run_directory(config);
  write_text_file(dir / "config.txt", serialize_config(config));
  std::vector<SeedOutcome> outcomes(config.seeds.size());
  std::vector<std::exception_ptr> errors;
  run_parallel(config.seeds.size(), jobs, [&](std::size_t i) { outcomes[i] = run_seed(config, config.seeds[i], dir); },
               errors);
  int status = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    const auto& o = outcomes[i];
    if (o.error) {
      out << "seed " << o.seed << ": diverged: " << *o.error << '\n';
      status = 1;
      continue;
    }
    out << "seed " << o.seed << ": " << (o.directory / "log.csv").string();
    if (auto ev = o.log.last_eval()) out << " final_return=" << format_double(ev->mean_return);
    out << '\n';
  }
  return status;
}

int cmd_eval(const std::filesystem::path& checkpoint, const ExperimentConfig& config, std::ostream& out) {
  const CheckpointKind kind = checkpoint_kind(checkpoint);
  const bool want_sac = config.algorithm == Algorithm::kSac;
  if ((kind == CheckpointKind::kSac) != want_sac)
    throw std::runtime_error("checkpoint algorithm does not match algo.name in the config");
  auto env = make_env(config.env);
  SeedStreams streams = seed_streams(0);
  Rng init(0);
  EvalReport report;
  auto run = [&](auto& agent) {
    load_checkpoint(checkpoint, agent, streams);
    // Same evaluation seed as the training run that produced the checkpoint.
    const std::uint64_t eval_seed = seed_streams(streams.master).eval.next_u64();
    report = evaluate_policy(agent, *env, config.train.eval_episodes, eval_seed);
  };
  if (want_sac) {
    SacAgent agent(env->observation_dim(), env->action_dim(), config.sac, init);
    run(agent);
  } else {
    PpoAgent agent(env->observation_dim(), env->action_dim(), config.ppo, init);
    run(agent);
  }
  out << "mean_return,se_return,mean_continuity,episodes\n"
      << format_double(report.mean_return) << ',' << format_double(report.se_return) << ','
      << format_double(report.mean_continuity) << ',' << report.episodes << '\n';
  return 0;
}

int cmd_sweep(const ExperimentConfig& config, const std::vector<std::string>& noises,
              const std::vector<std::string>& intervals, std::ostream& out, std::size_t jobs) {
  if (noises.empty()) throw std::invalid_argument("sweep: --noise needs at least one value");
  std::vector<SampleInterval> parsed;
  for (const auto& s : intervals) parsed.push_back(parse_interval(s));
  std::sort(parsed.begin(), parsed.end());
  parsed.erase(std::unique(parsed.begin(), parsed.end()), parsed.end());

  std::vector<ExperimentConfig> cells;
  for (const auto& name : noises) {
    const NoiseType noise = parse_noise_type(name);
    ExperimentConfig cell = config;
    cell.set_noise(noise);
    if (noise == NoiseType::kGsde) {
      if (parsed.empty()) throw std::invalid_argument("sweep: gsde needs --intervals");
      for (const auto& n : parsed) {
        ExperimentConfig c = cell;
        c.set_gsde_interval(n);
        cells.push_back(c);
      }
    } else {
      if (!parsed.empty()) out << "info: " << name << " ignores the interval axis\n";
      cells.push_back(cell);
    }
  }

  const auto root = run_directory(config);
  write_text_file(root / "config.txt", serialize_config(config));
  struct Job {
    std::size_t cell;
    std::uint64_t seed;
  };
  std::vector<Job> jobs_list;
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (auto seed : config.seeds) jobs_list.push_back({c, seed});
  std::vector<SeedOutcome> outcomes(jobs_list.size());
  std::vector<std::exception_ptr> errors;
  run_parallel(
      jobs_list.size(), jobs,
      [&](std::size_t i) {
        const auto& cell = cells[jobs_list[i].cell];
        outcomes[i] = run_seed(cell, jobs_list[i].seed, root / cell.label());
      },
      errors);

  int status = 0;
  std::vector<ParetoRow> rows;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& cell = cells[c];
    ParetoGroup group{cell.label(), cell.noise() == NoiseType::kGsde ? cell.gsde_interval().label() : "", {}};
    for (std::size_t i = 0; i < jobs_list.size(); ++i) {
      if (jobs_list[i].cell != c) continue;
      const auto seed = jobs_list[i].seed;
      if (errors[i]) {
        out << "warning: " << group.label << " seed " << seed << " failed: " << describe(errors[i]) << '\n';
        status = 1;
        continue;
      }
      const auto& o = outcomes[i];
      const auto last = o.log.last_eval();
      const auto cost = o.log.mean_train_continuity();
      if (o.error || !last || !cost) {
        out << "warning: " << group.label << " seed " << seed << " did not complete"
            << (o.error ? ": " + *o.error : std::string()) << '\n';
        status = 1;
        continue;
      }
      group.runs.push_back({last->mean_return, *cost});
    }
    if (group.runs.empty()) {
      out << "warning: no completed runs for " << group.label << '\n';
      rows.push_back({group.label, group.interval, std::nullopt});
    } else {
      const std::vector<ParetoGroup> one{group};
      rows.push_back({group.label, group.interval, aggregate_pareto(one).front()});
    }
  }
  write_pareto_csv(root / "pareto.csv", rows);
  out << (root / "pareto.csv").string() << '\n';
  return status;
}

int cmd_plot(const std::string& kind, const std::vector<std::filesystem::path>& inputs,
             const std::filesystem::path& output) {
  if (inputs.empty()) throw std::invalid_argument("plot: no input files");
  std::string svg;
  if (kind == "curve") {
    std::vector<CurveSeries> series;
    std::map<std::string, std::size_t> index;
    for (const auto& path : inputs) {
      std::string label = path.stem().string();
      const auto parent = path.parent_path();
      if (parent.filename().string().starts_with("seed_") && parent.has_parent_path())
        label = parent.parent_path().filename().string();
      auto [it, inserted] = index.emplace(label, series.size());
      if (inserted) series.push_back({label, {}});
      series[it->second].runs.push_back(read_run_log(path).rows);
    }
    svg = render_curve_svg(series);
  } else if (kind == "pareto") {
    std::vector<ParetoPanel> panels;
    for (const auto& path : inputs) {
      std::string title = path.parent_path().filename().string();
      if (title.empty()) title = path.stem().string();
      panels.push_back({title, read_pareto_csv(path)});
    }
    svg = render_pareto_svg(panels);
  } else {
    throw std::invalid_argument("plot: kind must be curve or pareto, got '" + kind + "'");
  }
  write_text_file(output, svg);
  return 0;
}

}  // namespace gsde
