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

#include "gsde/cli/svg_plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "gsde/metrics/evaluate.hpp"

namespace gsde {
namespace {

constexpr double kPanelW = 480.0;
constexpr double kPanelH = 360.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
  if (std::abs(v) < 5e-4) v = 0.0;  // avoid "-0.000"
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 3);
  return std::string(buf, res.ptr);
}

std::string tick(double v) {
  char buf[64];
  const double a = std::abs(v);
  const int digits = a >= 100 ? 0 : a >= 10 ? 1 : 2;
  const auto res = std::to_chars(buf, buf + sizeof buf, std::abs(v) < 1e-12 ? 0.0 : v, std::chars_format::fixed, digits);
  return std::string(buf, res.ptr);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = 0.0, hi = 1.0;
  void widen() {
    if (!(hi > lo)) {
      const double pad = std::abs(lo) > 0 ? std::abs(lo) * 0.1 : 1.0;
      lo -= pad;
      hi += pad;
    }
    const double m = (hi - lo) * 0.05;
    lo -= m;
    hi += m;
  }
};

/// Maps data coordinates into one panel at horizontal offset `ox`.
struct Frame {
  double ox;
  Range x, y;
  double px(double v) const { return ox + kLeft + (v - x.lo) / (x.hi - x.lo) * (kPanelW - kLeft - kRight); }
  double py(double v) const { return kTop + (y.hi - v) / (y.hi - y.lo) * (kPanelH - kTop - kBottom); }
};

void axes(std::string& svg, const Frame& f, const std::string& title, const std::string& xlabel,
          const std::string& ylabel) {
  const double x0 = f.ox + kLeft, x1 = f.ox + kPanelW - kRight;
  const double y0 = kPanelH - kBottom, y1 = kTop;
  svg += "<g class=\"axes\">\n";
  svg += "<rect x=\"" + num(x0) + "\" y=\"" + num(y1) + "\" width=\"" + num(x1 - x0) + "\" height=\"" + num(y0 - y1) +
         "\" fill=\"none\" stroke=\"#000\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = f.x.lo + (f.x.hi - f.x.lo) * i / 4.0;
    const double yv = f.y.lo + (f.y.hi - f.y.lo) * i / 4.0;
    svg += "<text x=\"" + num(f.px(xv)) + "\" y=\"" + num(y0 + 16) + "\" text-anchor=\"middle\" font-size=\"11\">" +
           tick(xv) + "</text>\n";
    svg += "<text x=\"" + num(x0 - 6) + "\" y=\"" + num(f.py(yv) + 4) + "\" text-anchor=\"end\" font-size=\"11\">" +
           tick(yv) + "</text>\n";
  }
  svg += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num(kPanelH - 12) +
         "\" text-anchor=\"middle\" font-size=\"12\">" + escape(xlabel) + "</text>\n";
  svg += "<text x=\"" + num(f.ox + 16) + "\" y=\"" + num((y0 + y1) / 2) + "\" text-anchor=\"middle\" font-size=\"12\" " +
         "transform=\"rotate(-90 " + num(f.ox + 16) + " " + num((y0 + y1) / 2) + ")\">" + escape(ylabel) + "</text>\n";
  svg += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num(kTop - 14) +
         "\" text-anchor=\"middle\" font-size=\"14\">" + escape(title) + "</text>\n";
  svg += "</g>\n";
}

std::string open_svg(double width, double height) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n" +
         "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
}

struct CurvePoint {
  double t, mean, se;
};

std::vector<CurvePoint> curve_points(const CurveSeries& s) {
  std::map<std::size_t, std::vector<double>> by_t;
  for (const auto& run : s.runs)
    for (const auto& row : run)
      if (row.eval) by_t[row.timestep].push_back(row.eval->mean_return);
  std::vector<CurvePoint> pts;
  for (const auto& [t, values] : by_t) {
    const MeanSe m = mean_and_standard_error(values);
    pts.push_back({static_cast<double>(t), m.mean, m.se});
  }
  return pts;
}

}  // namespace

std::string render_curve_svg(const std::vector<CurveSeries>& series) {
  std::vector<std::vector<CurvePoint>> all;
  Range x{INFINITY, -INFINITY}, y{INFINITY, -INFINITY};
  for (const auto& s : series) {
    all.push_back(curve_points(s));
    for (const auto& p : all.back()) {
      x.lo = std::min(x.lo, p.t);
      x.hi = std::max(x.hi, p.t);
      y.lo = std::min(y.lo, p.mean - p.se);
      y.hi = std::max(y.hi, p.mean + p.se);
    }
  }
  if (!(x.hi >= x.lo)) throw std::invalid_argument("plot: no evaluation rows to draw");
  if (!(x.hi > x.lo)) {
    x.lo -= 1.0;
    x.hi += 1.0;
  }
  y.widen();
  const double legend_h = 18.0 * static_cast<double>(series.size());
  std::string svg = open_svg(kPanelW, kPanelH + legend_h);
  const Frame f{0.0, x, y};
  axes(svg, f, "Evaluation return", "timestep", "mean return");
  for (std::size_t i = 0; i < series.size(); ++i) {
    const std::string color = kPalette[i % std::size(kPalette)];
    const auto& pts = all[i];
    if (pts.empty()) continue;
    std::string band, line;
    for (const auto& p : pts) band += num(f.px(p.t)) + "," + num(f.py(p.mean + p.se)) + " ";
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) band += num(f.px(it->t)) + "," + num(f.py(it->mean - it->se)) + " ";
    for (const auto& p : pts) line += num(f.px(p.t)) + "," + num(f.py(p.mean)) + " ";
    band.pop_back();
    line.pop_back();
    svg += "<polygon points=\"" + band + "\" fill=\"" + color + "\" fill-opacity=\"0.2\" stroke=\"none\"/>\n";
    svg += "<polyline points=\"" + line + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    const double ly = kPanelH + 12.0 + 18.0 * static_cast<double>(i);
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" + num(kLeft + 20) + "\" y2=\"" + num(ly - 4) +
           "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(kLeft + 26) + "\" y=\"" + num(ly) + "\" font-size=\"12\">" + escape(series[i].label) +
           " (" + std::to_string(series[i].runs.size()) + " runs)</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

namespace {

struct ScatterPoint {
  std::string label;
  double x, x_err, y, y_err;
};

std::vector<ScatterPoint> normalise_panel(const ParetoPanel& panel) {
  std::vector<const ParetoPoint*> pts;
  for (const auto& r : panel.rows)
    if (r.point) pts.push_back(&*r.point);
  std::vector<ScatterPoint> out;
  if (pts.empty()) return out;
  double best = -INFINITY;
  for (auto* p : pts) best = std::max(best, p->mean_return);
  const double scale = best != 0.0 ? std::abs(best) : 1.0;
  for (auto* p : pts)
    out.push_back({p->label, p->mean_train_continuity, p->se_train_continuity,
                   1.0 + (p->mean_return - best) / scale, p->se_return / scale});
  return out;
}

void scatter(std::string& svg, double ox, const std::string& title, const std::vector<ScatterPoint>& pts,
             const std::map<std::string, std::size_t>& colors) {
  Range x{INFINITY, -INFINITY}, y{INFINITY, -INFINITY};
  for (const auto& p : pts) {
    x.lo = std::min(x.lo, p.x - p.x_err);
    x.hi = std::max(x.hi, p.x + p.x_err);
    y.lo = std::min(y.lo, p.y - p.y_err);
    y.hi = std::max(y.hi, p.y + p.y_err);
  }
  if (pts.empty()) x = y = Range{};
  x.widen();
  y.widen();
  const Frame f{ox, x, y};
  axes(svg, f, title, "train continuity cost", "normalized return");
  for (const auto& p : pts) {
    const std::string color = kPalette[colors.at(p.label) % std::size(kPalette)];
    const double cx = f.px(p.x), cy = f.py(p.y);
    svg += "<line x1=\"" + num(f.px(p.x - p.x_err)) + "\" y1=\"" + num(cy) + "\" x2=\"" + num(f.px(p.x + p.x_err)) +
           "\" y2=\"" + num(cy) + "\" stroke=\"" + color + "\"/>\n";
    svg += "<line x1=\"" + num(cx) + "\" y1=\"" + num(f.py(p.y - p.y_err)) + "\" x2=\"" + num(cx) + "\" y2=\"" +
           num(f.py(p.y + p.y_err)) + "\" stroke=\"" + color + "\"/>\n";
    svg += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"4\" fill=\"" + color + "\"/>\n";
    svg += "<text x=\"" + num(cx + 6) + "\" y=\"" + num(cy - 6) + "\" font-size=\"11\">" + escape(p.label) + "</text>\n";
  }
}

}  // namespace

std::string render_pareto_svg(const std::vector<ParetoPanel>& panels) {
  if (panels.empty()) throw std::invalid_argument("plot: no pareto tables given");
  std::vector<std::vector<ScatterPoint>> per_panel;
  std::map<std::string, std::size_t> colors;
  bool any = false;
  for (const auto& panel : panels) {
    per_panel.push_back(normalise_panel(panel));
    for (const auto& p : per_panel.back()) {
      colors.emplace(p.label, colors.size());
      any = true;
    }
  }
  if (!any) throw std::invalid_argument("plot: pareto tables contain no completed cells");

  // Macro average over labels present in every panel, in first-panel order.
  std::vector<ScatterPoint> macro;
  for (const auto& p : per_panel.front()) {
    double sx = 0, sy = 0, ex = 0, ey = 0;
    bool everywhere = true;
    for (const auto& panel : per_panel) {
      auto it = std::find_if(panel.begin(), panel.end(), [&](const ScatterPoint& q) { return q.label == p.label; });
      if (it == panel.end()) {
        everywhere = false;
        break;
      }
      sx += it->x;
      sy += it->y;
      ex += it->x_err * it->x_err;
      ey += it->y_err * it->y_err;
    }
    if (!everywhere) continue;
    const double n = static_cast<double>(per_panel.size());
    macro.push_back({p.label, sx / n, std::sqrt(ex) / n, sy / n, std::sqrt(ey) / n});
  }

  const double width = kPanelW * static_cast<double>(panels.size() + 1);
  std::string svg = open_svg(width, kPanelH);
  for (std::size_t i = 0; i < panels.size(); ++i) scatter(svg, kPanelW * static_cast<double>(i), panels[i].title, per_panel[i], colors);
  scatter(svg, kPanelW * static_cast<double>(panels.size()), "macro average (" + std::to_string(panels.size()) + " tasks)",
          macro, colors);
  svg += "</svg>\n";
  return svg;
}

}  // namespace gsde
