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

// Command-line front end: train, eval, sweep and plot.

#include <CLI11.hpp>

#include <iostream>

#include "gsde/cli/commands.hpp"
#include "gsde/error.hpp"
#include "gsde/runtime.hpp"

int main(int argc, char** argv) {
  gsde::tune_allocator();
  CLI::App app{"gSDE experiments: SAC and PPO with structured exploration noise"};
  app.require_subcommand(1);

  std::string config_path;
  std::size_t jobs = 1;

  auto* train = app.add_subcommand("train", "train every seed listed in a config");
  train->add_option("config", config_path, "config file")->required()->check(CLI::ExistingFile);
  train->add_option("-j,--jobs", jobs, "seeds trained concurrently")->check(CLI::PositiveNumber);

  std::string checkpoint;
  auto* eval = app.add_subcommand("eval", "evaluate a saved checkpoint");
  eval->add_option("checkpoint", checkpoint, "checkpoint.bin")->required()->check(CLI::ExistingFile);
  eval->add_option("config", config_path, "config the checkpoint was trained with")->required()->check(CLI::ExistingFile);

  std::vector<std::string> noises, intervals;
  auto* sweep = app.add_subcommand("sweep", "noise type x sampling interval grid with a pareto table");
  sweep->add_option("config", config_path, "base config")->required()->check(CLI::ExistingFile);
  sweep->add_option("--noise", noises, "noise types: none gaussian ou param gsde")->required();
  sweep->add_option("--intervals", intervals, "gsde sampling intervals, e.g. 1 8 64 episodic");
  sweep->add_option("-j,--jobs", jobs, "runs executed concurrently")->check(CLI::PositiveNumber);

  std::string kind;
  std::vector<std::string> inputs;
  std::string output;
  auto* plot = app.add_subcommand("plot", "render an SVG from run logs or pareto tables");
  plot->add_option("kind", kind, "curve or pareto")->required()->check(CLI::IsMember({"curve", "pareto"}));
  plot->add_option("csv", inputs, "input CSV files")->required()->check(CLI::ExistingFile);
  plot->add_option("-o,--output", output, "output SVG path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*train) return gsde::cmd_train(gsde::load_config(config_path), std::cout, jobs);
    if (*eval) return gsde::cmd_eval(checkpoint, gsde::load_config(config_path), std::cout);
    if (*sweep) return gsde::cmd_sweep(gsde::load_config(config_path), noises, intervals, std::cout, jobs);
    if (*plot) {
      std::vector<std::filesystem::path> paths(inputs.begin(), inputs.end());
      return gsde::cmd_plot(kind, paths, output);
    }
  } catch (const gsde::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
