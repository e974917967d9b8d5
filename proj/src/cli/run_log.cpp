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

#include "gsde/cli/run_log.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gsde/cli/config.hpp"

namespace gsde {
namespace {

std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = line.find(',');
    out.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line = line.substr(comma + 1);
  }
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') throw std::runtime_error("csv: CRLF line endings are not accepted");
    out.push_back(line);
    if (nl == std::string_view::npos) break;
    text = text.substr(nl + 1);
  }
  return out;
}

std::optional<double> opt_double(std::string_view s, std::size_t line) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::runtime_error("csv line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
  return v;
}

std::size_t to_size(std::string_view s, std::size_t line) {
  std::size_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::runtime_error("csv line " + std::to_string(line) + ": bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string format_run_log(const TrainingLog& log, const std::optional<std::string>& error) {
  std::string out(kRunLogHeader);
  out += '\n';
  for (const LogRow& r : log.rows()) {
    out += std::to_string(r.timestep);
    out += ',';
    if (r.episode) out += std::to_string(*r.episode);
    out += ',' + cell(r.episode_return) + ',' + cell(r.episode_continuity) + ',';
    if (r.eval) {
      out += format_double(r.eval->mean_return) + ',' + format_double(r.eval->se_return) + ',' +
             format_double(r.eval->mean_continuity);
    } else {
      out += ",,";
    }
    out += ',' + cell(r.wall_clock_seconds) + '\n';
  }
  if (error) {
    std::string msg = *error;
    for (char& ch : msg)
      if (ch == '\n') ch = ' ';
    out += "# error: " + msg + '\n';
  }
  return out;
}

void write_run_log(const std::filesystem::path& path, const TrainingLog& log, const std::optional<std::string>& error) {
  write_text_file(path, format_run_log(log, error));
}

ParsedRunLog parse_run_log(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines.front() != kRunLogHeader) throw std::runtime_error("run log: header does not match the schema");
  ParsedRunLog out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    if (line.empty()) continue;
    if (line.starts_with("#")) {
      if (line.starts_with("# error: ")) out.error = std::string(line.substr(9));
      continue;
    }
    const auto cells = split(line);
    if (cells.size() != 8) throw std::runtime_error("run log line " + std::to_string(i + 1) + ": expected 8 cells");
    LogRow row;
    row.timestep = to_size(cells[0], i + 1);
    if (!cells[1].empty()) row.episode = to_size(cells[1], i + 1);
    row.episode_return = opt_double(cells[2], i + 1);
    row.episode_continuity = opt_double(cells[3], i + 1);
    const auto er = opt_double(cells[4], i + 1);
    const auto es = opt_double(cells[5], i + 1);
    const auto ec = opt_double(cells[6], i + 1);
    if (er.has_value() != es.has_value() || er.has_value() != ec.has_value())
      throw std::runtime_error("run log line " + std::to_string(i + 1) + ": partial evaluation columns");
    if (er) row.eval = EvalReport{*er, *es, *ec, 0, row.timestep};
    row.wall_clock_seconds = opt_double(cells[7], i + 1);
    if (!out.rows.empty() && out.rows.back().timestep >= row.timestep)
      throw std::runtime_error("run log line " + std::to_string(i + 1) + ": timesteps must increase");
    out.rows.push_back(std::move(row));
  }
  return out;
}

ParsedRunLog read_run_log(const std::filesystem::path& path) { return parse_run_log(read_text_file(path)); }

std::string format_pareto_csv(const std::vector<ParetoRow>& rows) {
  std::string out(kParetoHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += r.label + ',' + r.interval + ',';
    if (r.point) {
      const ParetoPoint& p = *r.point;
      out += format_double(p.mean_return) + ',' + format_double(p.se_return) + ',' +
             format_double(p.mean_train_continuity) + ',' + format_double(p.se_train_continuity) + ',' +
             std::to_string(p.seeds);
    } else {
      out += ",,,,0";
    }
    out += '\n';
  }
  return out;
}

void write_pareto_csv(const std::filesystem::path& path, const std::vector<ParetoRow>& rows) {
  write_text_file(path, format_pareto_csv(rows));
}

std::vector<ParetoRow> parse_pareto_csv(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines.front() != kParetoHeader) throw std::runtime_error("pareto csv: header does not match the schema");
  std::vector<ParetoRow> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto cells = split(lines[i]);
    if (cells.size() != 7) throw std::runtime_error("pareto csv line " + std::to_string(i + 1) + ": expected 7 cells");
    ParetoRow row{std::string(cells[0]), std::string(cells[1]), std::nullopt};
    const std::size_t seeds = to_size(cells[6], i + 1);
    if (seeds > 0) {
      ParetoPoint p;
      p.label = row.label;
      p.interval = row.interval;
      auto req = [&](std::string_view s) {
        auto v = opt_double(s, i + 1);
        if (!v) throw std::runtime_error("pareto csv line " + std::to_string(i + 1) + ": missing value");
        return *v;
      };
      p.mean_return = req(cells[2]);
      p.se_return = req(cells[3]);
      p.mean_train_continuity = req(cells[4]);
      p.se_train_continuity = req(cells[5]);
      p.seeds = seeds;
      row.point = p;
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<ParetoRow> read_pareto_csv(const std::filesystem::path& path) { return parse_pareto_csv(read_text_file(path)); }

}  // namespace gsde
