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

#include "gsde/cli/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "gsde/error.hpp"

namespace gsde {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, std::string_view v) {
  double out = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw ConfigError(key, "expected a number, got '" + std::string(v) + "'");
  return out;
}

std::uint64_t to_u64(const std::string& key, std::string_view v) {
  std::uint64_t out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw ConfigError(key, "expected a non-negative integer, got '" + std::string(v) + "'");
  return out;
}

std::size_t to_size(const std::string& key, std::string_view v) { return static_cast<std::size_t>(to_u64(key, v)); }

bool to_bool(const std::string& key, std::string_view v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw ConfigError(key, "expected true or false, got '" + std::string(v) + "'");
}

std::vector<std::uint64_t> to_u64_list(const std::string& key, std::string_view v) {
  std::vector<std::uint64_t> out;
  while (!v.empty()) {
    const auto comma = v.find(',');
    out.push_back(to_u64(key, trim(v.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    v = v.substr(comma + 1);
  }
  if (out.empty()) throw ConfigError(key, "expected a non-empty comma-separated list");
  return out;
}

std::vector<std::size_t> to_size_list(const std::string& key, std::string_view v) {
  std::vector<std::size_t> out;
  for (auto x : to_u64_list(key, v)) {
    if (x == 0) throw ConfigError(key, "layer widths must be positive");
    out.push_back(static_cast<std::size_t>(x));
  }
  return out;
}

VarianceTransform to_transform(const std::string& key, std::string_view v) {
  if (v == "exp") return VarianceTransform::kExp;
  if (v == "expln") return VarianceTransform::kExpln;
  throw ConfigError(key, "expected exp or expln");
}

std::string transform_name(VarianceTransform t) { return t == VarianceTransform::kExp ? "exp" : "expln"; }

Activation to_activation(const std::string& key, std::string_view v) {
  if (v == "relu") return Activation::kReLU;
  if (v == "tanh") return Activation::kTanh;
  throw ConfigError(key, "expected relu or tanh");
}

std::string activation_name(Activation a) { return a == Activation::kTanh ? "tanh" : "relu"; }

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

using Setter = std::function<void(ExperimentConfig&, const std::string&, std::string_view)>;

std::map<std::string, Setter> common_setters() {
  std::map<std::string, Setter> s;
  s["env.id"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) {
    if (v != "pendulum" && v != "double_integrator") throw ConfigError(k, "unknown env '" + std::string(v) + "'");
    c.env.id = std::string(v);
  };
  s["env.time_feature"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) { c.env.time_feature = to_bool(k, v); };
  s["env.history"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) { c.env.history = to_bool(k, v); };
  s["algo.name"] = [](ExperimentConfig&, const std::string&, std::string_view) {};
  s["train.total_steps"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) { c.train.total_steps = to_size(k, v); };
  s["train.eval_interval"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) { c.train.eval_interval = to_size(k, v); };
  s["train.eval_episodes"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) {
    c.train.eval_episodes = to_size(k, v);
    if (c.train.eval_episodes == 0) throw ConfigError(k, "need at least one evaluation episode");
  };
  s["train.seeds"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) { c.seeds = to_u64_list(k, v); };
  s["output.dir"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) {
    if (v.empty()) throw ConfigError(k, "must not be empty");
    c.output_dir = std::string(v);
  };
  s["output.name"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) {
    if (v.empty()) throw ConfigError(k, "must not be empty");
    c.name = std::string(v);
  };
  s["log.wall_clock"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) { c.train.wall_clock = to_bool(k, v); };
  return s;
}

template <typename Cfg>
void add_shared_algo_setters(std::map<std::string, Setter>& s, Cfg ExperimentConfig::*block) {
  s["algo.learning_rate"] = [block](ExperimentConfig& c, const std::string& k, std::string_view v) {
    const double x = to_double(k, v);
    if (!(x > 0.0)) throw ConfigError(k, "must be positive");
    (c.*block).learning_rate = x;
  };
  s["algo.gamma"] = [block](ExperimentConfig& c, const std::string& k, std::string_view v) {
    const double x = to_double(k, v);
    if (!(x >= 0.0 && x < 1.0)) throw ConfigError(k, "must lie in [0, 1)");
    (c.*block).gamma = x;
  };
  s["net.hidden"] = [block](ExperimentConfig& c, const std::string& k, std::string_view v) {
    (c.*block).hidden = to_size_list(k, v);
  };
  s["noise.gsde_interval"] = [block](ExperimentConfig& c, const std::string& k, std::string_view v) {
    try {
      (c.*block).gsde_interval = parse_interval(v);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(k, e.what());
    }
  };
  s["noise.variance_transform"] = [block](ExperimentConfig& c, const std::string& k, std::string_view v) {
    (c.*block).variance_transform = to_transform(k, v);
  };
}

std::map<std::string, Setter> sac_setters() {
  auto s = common_setters();
  add_shared_algo_setters(s, &ExperimentConfig::sac);
  s["noise.type"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) {
    try {
      c.sac.noise = parse_noise_type(v);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(k, e.what());
    }
  };
  s["noise.log_sigma_init"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) { c.sac.log_sigma_init = to_double(k, v); };
  s["noise.ou_sigma"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) {
    c.sac.ou_sigma = to_double(k, v);
    if (c.sac.ou_sigma < 0.0) throw ConfigError(k, "must be >= 0");
  };
  s["noise.param_sigma"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) {
    c.sac.param_noise_sigma = to_double(k, v);
    if (!(c.sac.param_noise_sigma > 0.0)) throw ConfigError(k, "must be positive");
  };
  s["algo.buffer_size"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) {
    c.sac.buffer_size = to_size(k, v);
    if (c.sac.buffer_size == 0) throw ConfigError(k, "must be positive");
  };
  s["algo.batch_size"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) {
    c.sac.batch_size = to_size(k, v);
    if (c.sac.batch_size == 0) throw ConfigError(k, "must be positive");
  };
  s["algo.tau"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) {
    c.sac.tau = to_double(k, v);
    if (!(c.sac.tau >= 0.0 && c.sac.tau <= 1.0)) throw ConfigError(k, "must lie in [0, 1]");
  };
  s["algo.warmup_steps"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) { c.sac.warmup_steps = to_size(k, v); };
  s["algo.target_entropy"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) {
    if (v == "auto") c.sac.target_entropy.reset();
    else c.sac.target_entropy = to_double(k, v);
  };
  s["algo.initial_alpha"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) {
    c.sac.initial_alpha = to_double(k, v);
    if (!(c.sac.initial_alpha > 0.0)) throw ConfigError(k, "must be positive");
  };
  s["algo.mean_clip"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) {
    c.sac.mean_clip = to_double(k, v);
    if (!(c.sac.mean_clip > 0.0)) throw ConfigError(k, "must be positive");
  };
  return s;
}

std::map<std::string, Setter> ppo_setters() {
  auto s = common_setters();
  add_shared_algo_setters(s, &ExperimentConfig::ppo);
  s["noise.type"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) {
    NoiseType n;
    try {
      n = parse_noise_type(v);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(k, e.what());
    }
    if (n != NoiseType::kGsde && n != NoiseType::kGaussian) throw ConfigError(k, "ppo supports gsde and gaussian only");
    c.ppo.noise = n;
  };
  s["noise.log_sigma_init"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) {
    if (v == "auto") c.ppo.log_sigma_init.reset();
    else c.ppo.log_sigma_init = to_double(k, v);
  };
  s["net.activation"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) {
    if (v == "auto") c.ppo.activation.reset();
    else c.ppo.activation = to_activation(k, v);
  };
  auto positive = [](std::size_t PpoConfig::*field) {
    return [field](ExperimentConfig& c, const std::string& k, std::string_view v) {
      c.ppo.*field = to_size(k, v);
      if (c.ppo.*field == 0) throw ConfigError(k, "must be positive");
    };
  };
  s["algo.workers"] = positive(&PpoConfig::workers);
  s["algo.steps_per_rollout"] = positive(&PpoConfig::steps_per_rollout);
  s["algo.epochs"] = positive(&PpoConfig::epochs);
  s["algo.minibatch_size"] = positive(&PpoConfig::minibatch_size);
  auto unit = [](double PpoConfig::*field, bool open_top) {
    return [field, open_top](ExperimentConfig& c, const std::string& k, std::string_view v) {
      const double x = to_double(k, v);
      if (!(x >= 0.0 && (open_top ? x < 1.0 : x <= 1.0))) throw ConfigError(k, "out of range");
      c.ppo.*field = x;
    };
  };
  s["algo.gae_lambda"] = unit(&PpoConfig::gae_lambda, false);
  s["algo.clip_range"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) {
    c.ppo.clip_range = to_double(k, v);
    if (!(c.ppo.clip_range > 0.0)) throw ConfigError(k, "must be positive");
  };
  auto non_negative = [](double PpoConfig::*field) {
    return [field](ExperimentConfig& c, const std::string& k, std::string_view v) {
      c.ppo.*field = to_double(k, v);
      if (!(c.ppo.*field >= 0.0)) throw ConfigError(k, "must be >= 0");
    };
  };
  s["algo.vf_coef"] = non_negative(&PpoConfig::vf_coef);
  s["algo.ent_coef"] = non_negative(&PpoConfig::ent_coef);
  s["algo.max_grad_norm"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) {
    c.ppo.max_grad_norm = to_double(k, v);
    if (!(c.ppo.max_grad_norm > 0.0)) throw ConfigError(k, "must be positive");
  };
  s["algo.normalize"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) { c.ppo.normalize = to_bool(k, v); };
  s["algo.parallel"] = [](ExperimentConfig& c, const std::string& k, std::string_view v) { c.ppo.parallel = to_bool(k, v); };
  return s;
}

}  // namespace

std::string to_string(Algorithm algo) { return algo == Algorithm::kSac ? "sac" : "ppo"; }

void ExperimentConfig::set_noise(NoiseType noise) {
  if (algorithm == Algorithm::kSac) {
    sac.noise = noise;
  } else {
    if (noise != NoiseType::kGsde && noise != NoiseType::kGaussian)
      throw ConfigError("noise.type", "ppo supports gsde and gaussian only");
    ppo.noise = noise;
  }
}

void ExperimentConfig::set_gsde_interval(SampleInterval interval) {
  if (algorithm == Algorithm::kSac) sac.gsde_interval = interval;
  else ppo.gsde_interval = interval;
}

std::string ExperimentConfig::label() const {
  if (noise() == NoiseType::kGsde) return "gsde-" + gsde_interval().label();
  return to_string(noise());
}

SampleInterval parse_interval(std::string_view text) {
  if (text == "episodic") return SampleInterval::episodic();
  std::size_t n = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), n);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw std::invalid_argument("gsde interval must be a positive integer or 'episodic', got '" + std::string(text) + "'");
  return SampleInterval(n);
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

ExperimentConfig parse_config(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::map<std::string, std::size_t> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError("", "line " + std::to_string(line_no) + ": empty key");
    if (seen.count(key)) throw ConfigError(key, "duplicate key");
    seen[key] = entries.size();
    entries.emplace_back(std::move(key), std::move(value));
  }

  ExperimentConfig cfg;
  if (auto it = seen.find("algo.name"); it != seen.end()) {
    const std::string& name = entries[it->second].second;
    if (name == "sac") cfg.algorithm = Algorithm::kSac;
    else if (name == "ppo") cfg.algorithm = Algorithm::kPpo;
    else throw ConfigError("algo.name", "expected sac or ppo, got '" + name + "'");
  }
  const auto setters = cfg.algorithm == Algorithm::kSac ? sac_setters() : ppo_setters();
  for (const auto& [key, value] : entries) {
    const auto it = setters.find(key);
    if (it == setters.end()) {
      const auto other = cfg.algorithm == Algorithm::kSac ? ppo_setters() : sac_setters();
      if (other.count(key)) throw ConfigError(key, "not applicable to " + to_string(cfg.algorithm));
      throw ConfigError(key, "unknown key");
    }
    it->second(cfg, key, value);
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot read config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const ExperimentConfig& c) {
  std::ostringstream o;
  auto kv = [&o](const char* key, const std::string& value) { o << key << " = " << value << '\n'; };
  kv("env.id", c.env.id);
  kv("env.time_feature", yes_no(c.env.time_feature));
  kv("env.history", yes_no(c.env.history));
  kv("algo.name", to_string(c.algorithm));
  if (c.algorithm == Algorithm::kSac) {
    const SacConfig& s = c.sac;
    kv("algo.learning_rate", format_double(s.learning_rate));
    kv("algo.gamma", format_double(s.gamma));
    kv("algo.buffer_size", std::to_string(s.buffer_size));
    kv("algo.batch_size", std::to_string(s.batch_size));
    kv("algo.tau", format_double(s.tau));
    kv("algo.warmup_steps", std::to_string(s.warmup_steps));
    kv("algo.target_entropy", s.target_entropy ? format_double(*s.target_entropy) : "auto");
    kv("algo.initial_alpha", format_double(s.initial_alpha));
    kv("algo.mean_clip", format_double(s.mean_clip));
    kv("net.hidden", join(s.hidden));
    kv("noise.type", to_string(s.noise));
    kv("noise.gsde_interval", s.gsde_interval.label());
    kv("noise.variance_transform", transform_name(s.variance_transform));
    kv("noise.log_sigma_init", format_double(s.log_sigma_init));
    kv("noise.ou_sigma", format_double(s.ou_sigma));
    kv("noise.param_sigma", format_double(s.param_noise_sigma));
  } else {
    const PpoConfig& p = c.ppo;
    kv("algo.learning_rate", format_double(p.learning_rate));
    kv("algo.gamma", format_double(p.gamma));
    kv("algo.workers", std::to_string(p.workers));
    kv("algo.steps_per_rollout", std::to_string(p.steps_per_rollout));
    kv("algo.epochs", std::to_string(p.epochs));
    kv("algo.minibatch_size", std::to_string(p.minibatch_size));
    kv("algo.gae_lambda", format_double(p.gae_lambda));
    kv("algo.clip_range", format_double(p.clip_range));
    kv("algo.vf_coef", format_double(p.vf_coef));
    kv("algo.ent_coef", format_double(p.ent_coef));
    kv("algo.max_grad_norm", format_double(p.max_grad_norm));
    kv("algo.normalize", yes_no(p.normalize));
    kv("algo.parallel", yes_no(p.parallel));
    kv("net.hidden", join(p.hidden));
    kv("net.activation", p.activation ? activation_name(*p.activation) : "auto");
    kv("noise.type", to_string(p.noise));
    kv("noise.gsde_interval", p.gsde_interval.label());
    kv("noise.variance_transform", transform_name(p.variance_transform));
    kv("noise.log_sigma_init", p.log_sigma_init ? format_double(*p.log_sigma_init) : "auto");
  }
  kv("train.total_steps", std::to_string(c.train.total_steps));
  kv("train.eval_interval", std::to_string(c.train.eval_interval));
  kv("train.eval_episodes", std::to_string(c.train.eval_episodes));
  kv("train.seeds", join(c.seeds));
  kv("output.dir", c.output_dir);
  kv("output.name", c.name);
  kv("log.wall_clock", yes_no(c.train.wall_clock));
  return o.str();
}

std::filesystem::path output_root(const ExperimentConfig& config) {
  if (const char* env = std::getenv("GSDE_OUTPUT_ROOT"); env != nullptr && *env != '\0') return env;
  return config.output_dir;
}

}  // namespace gsde
