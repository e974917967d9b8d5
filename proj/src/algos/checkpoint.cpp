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

#include "gsde/algos/checkpoint.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace gsde {
namespace {

constexpr char kMagic[8] = {'G', 'S', 'D', 'E', 'C', 'K', 'P', 'T'};

class Writer {
 public:
  explicit Writer(const std::filesystem::path& path) : out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw std::runtime_error("checkpoint: cannot open " + path.string() + " for writing");
  }
  void u64(std::uint64_t v) { raw(&v, sizeof v); }
  void f64(double v) { raw(&v, sizeof v); }
  void doubles(std::span<const double> v) {
    u64(v.size());
    raw(v.data(), v.size() * sizeof(double));
  }
  void text(const std::string& s) {
    u64(s.size());
    raw(s.data(), s.size());
  }
  void raw(const void* p, std::size_t n) { out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n)); }
  void finish() {
    out_.flush();
    if (!out_) throw std::runtime_error("checkpoint: write failed");
  }

 private:
  std::ofstream out_;
};

class Reader {
 public:
  explicit Reader(const std::filesystem::path& path) : in_(path, std::ios::binary) {
    if (!in_) throw std::runtime_error("checkpoint: cannot open " + path.string());
  }
  std::uint64_t u64() {
    std::uint64_t v = 0;
    raw(&v, sizeof v);
    return v;
  }
  double f64() {
    double v = 0;
    raw(&v, sizeof v);
    return v;
  }
  void doubles(std::span<double> dst) {
    if (u64() != dst.size()) throw std::runtime_error("checkpoint: tensor size does not match the configuration");
    raw(dst.data(), dst.size() * sizeof(double));
  }
  std::vector<double> doubles() {
    std::vector<double> v(length());
    raw(v.data(), v.size() * sizeof(double));
    return v;
  }
  std::string text() {
    std::string s(length(), '\0');
    raw(s.data(), s.size());
    return s;
  }
  void raw(void* p, std::size_t n) {
    in_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (!in_) throw std::runtime_error("checkpoint: truncated file");
  }
  void expect_end() {
    if (in_.peek() != std::char_traits<char>::eof()) throw std::runtime_error("checkpoint: trailing bytes");
  }

 private:
  std::size_t length() {
    const std::uint64_t n = u64();
    if (n > (std::uint64_t{1} << 32)) throw std::runtime_error("checkpoint: implausible length");
    return static_cast<std::size_t>(n);
  }
  std::ifstream in_;
};

void write_header(Writer& w, CheckpointKind kind) {
  w.raw(kMagic, sizeof kMagic);
  w.u64(kCheckpointVersion);
  w.u64(static_cast<std::uint64_t>(kind));
}

CheckpointKind read_header(Reader& r) {
  char magic[8];
  r.raw(magic, sizeof magic);
  if (std::memcmp(magic, kMagic, sizeof magic) != 0) throw std::runtime_error("checkpoint: bad magic");
  if (r.u64() != kCheckpointVersion) throw std::runtime_error("checkpoint: unsupported version");
  const std::uint64_t kind = r.u64();
  if (kind > 1) throw std::runtime_error("checkpoint: unknown algorithm tag");
  return static_cast<CheckpointKind>(kind);
}

void write_spans(Writer& w, std::span<const std::span<const double>> spans) {
  w.u64(spans.size());
  for (auto s : spans) w.doubles(s);
}

void read_spans(Reader& r, std::span<const std::span<double>> spans) {
  if (r.u64() != spans.size()) throw std::runtime_error("checkpoint: tensor count does not match the configuration");
  for (auto s : spans) r.doubles(s);
}

void write_adam(Writer& w, const AdamState& s) {
  w.u64(static_cast<std::uint64_t>(s.step));
  w.u64(s.first_moment.size());
  for (std::size_t i = 0; i < s.first_moment.size(); ++i) {
    w.doubles(s.first_moment[i]);
    w.doubles(s.second_moment[i]);
  }
}

void read_adam(Reader& r, AdamState& s) {
  s.step = static_cast<std::int64_t>(r.u64());
  if (r.u64() != s.first_moment.size()) throw std::runtime_error("checkpoint: optimizer layout mismatch");
  for (std::size_t i = 0; i < s.first_moment.size(); ++i) {
    r.doubles(s.first_moment[i]);
    r.doubles(s.second_moment[i]);
  }
}

void write_streams(Writer& w, const SeedStreams& s) {
  w.u64(s.master);
  for (const Rng* rng : {&s.env, &s.policy_init, &s.noise, &s.eval}) w.text(rng->serialize());
}

void read_streams(Reader& r, SeedStreams& s) {
  s.master = r.u64();
  for (Rng* rng : {&s.env, &s.policy_init, &s.noise, &s.eval}) rng->deserialize(r.text());
}

void write_stats(Writer& w, const RunningMeanStd& s) {
  w.doubles(s.mean());
  w.doubles(s.var());
  w.f64(s.count());
}

void read_stats(Reader& r, RunningMeanStd& s) {
  auto mean = r.doubles();
  auto var = r.doubles();
  const double count = r.f64();
  if (mean.size() != s.dim()) throw std::runtime_error("checkpoint: normaliser width mismatch");
  s.restore(std::move(mean), std::move(var), count);
}

}  // namespace

void save_checkpoint(const std::filesystem::path& path, const SacAgent& agent, const SeedStreams& streams) {
  Writer w(path);
  write_header(w, CheckpointKind::kSac);
  write_spans(w, agent.actor_parameters());
  write_spans(w, agent.critic_parameters());
  auto targets = agent.q1_target.parameters();
  auto t2 = agent.q2_target.parameters();
  targets.insert(targets.end(), t2.begin(), t2.end());
  write_spans(w, targets);
  w.f64(agent.log_alpha);
  write_adam(w, agent.actor_optimizer);
  write_adam(w, agent.critic_optimizer);
  write_adam(w, agent.alpha_optimizer);
  w.u64(agent.gsde ? 1 : 0);
  if (agent.gsde) {
    w.doubles(agent.gsde->theta_eps().data());
    w.u64(agent.gsde->steps_since_resample());
  }
  write_streams(w, streams);
  w.finish();
}

void load_checkpoint(const std::filesystem::path& path, SacAgent& agent, SeedStreams& streams) {
  Reader r(path);
  if (read_header(r) != CheckpointKind::kSac) throw std::runtime_error("checkpoint: not a SAC checkpoint");
  read_spans(r, agent.actor_parameters());
  read_spans(r, agent.critic_parameters());
  read_spans(r, agent.target_parameters());
  agent.log_alpha = r.f64();
  read_adam(r, agent.actor_optimizer);
  read_adam(r, agent.critic_optimizer);
  read_adam(r, agent.alpha_optimizer);
  const bool has_gsde = r.u64() != 0;
  if (has_gsde != agent.uses_gsde()) throw std::runtime_error("checkpoint: noise type does not match the configuration");
  if (has_gsde) {
    Matrix theta(agent.gsde->latent_dim(), agent.gsde->action_dim());
    r.doubles(theta.data());
    const std::size_t counter = r.u64();
    agent.gsde->restore(std::move(theta), counter);
  }
  read_streams(r, streams);
  r.expect_end();
}

void save_checkpoint(const std::filesystem::path& path, const PpoAgent& agent, const SeedStreams& streams) {
  Writer w(path);
  write_header(w, CheckpointKind::kPpo);
  write_spans(w, agent.parameters());
  write_adam(w, agent.optimizer);
  write_stats(w, agent.normalizer.obs_stats);
  write_stats(w, agent.normalizer.return_stats);
  write_streams(w, streams);
  w.finish();
}

void load_checkpoint(const std::filesystem::path& path, PpoAgent& agent, SeedStreams& streams) {
  Reader r(path);
  if (read_header(r) != CheckpointKind::kPpo) throw std::runtime_error("checkpoint: not a PPO checkpoint");
  read_spans(r, agent.parameters());
  read_adam(r, agent.optimizer);
  read_stats(r, agent.normalizer.obs_stats);
  read_stats(r, agent.normalizer.return_stats);
  read_streams(r, streams);
  r.expect_end();
}

CheckpointKind checkpoint_kind(const std::filesystem::path& path) {
  Reader r(path);
  return read_header(r);
}

}  // namespace gsde
