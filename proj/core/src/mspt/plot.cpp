// Copyright 2026 The TripletForge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <string>

#include "tforge/error.hpp"
#include "tforge/mspt.hpp"

namespace tforge::mspt {
namespace {

constexpr const char* kActualColor = "#ff7f0e";
constexpr const char* kRandomColor = "#1f77b4";
constexpr double kLeft = 64, kRight = 24, kTop = 36, kBottom = 56;

void appendf(std::string& out, const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  const int n = std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  out.append(buf, static_cast<std::size_t>(std::min<int>(n, sizeof buf - 1)));
}

std::string xml_escape(const std::string& s) {
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

struct Frame {
  double x0, x1, y1;  // data ranges; y starts at 0
  double w, h;        // plot area size in px

  double px(double x) const { return kLeft + (x - x0) / (x1 - x0) * w; }
  double py(double y) const { return kTop + h - y / y1 * h; }
};

void draw_histogram(std::string& out, const Frame& f, const std::vector<HistBin>& bins,
                    std::size_t n, const char* color) {
  for (const auto& b : bins) {
    if (b.count == 0) continue;
    const double density = static_cast<double>(b.count) / (static_cast<double>(n) * (b.right - b.left));
    const double top = f.py(density);
    appendf(out,
            "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"%s\" "
            "fill-opacity=\"0.35\" stroke=\"none\"/>\n",
            f.px(b.left), top, f.px(b.right) - f.px(b.left), f.py(0.0) - top, color);
  }
}

void draw_curve(std::string& out, const Frame& f, const std::vector<KdePoint>& curve,
                const char* color) {
  out += "<polyline fill=\"none\" stroke-width=\"2\" stroke=\"";
  out += color;
  out += "\" points=\"";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    appendf(out, i ? " %.2f,%.2f" : "%.2f,%.2f", f.px(curve[i].x), f.py(curve[i].density));
  }
  out += "\"/>\n";
}

}  // namespace

std::string render_distribution_svg(std::span<const double> actual, std::span<const double> random,
                                    const PlotOptions& opts) {
  if (actual.size() < 2 || random.size() < 2) {
    throw Error(ErrorCode::kTooFewSamples, "plot needs at least 2 samples per distribution");
  }
  const auto kde_a = kde_curve(actual, opts.points);
  const auto kde_r = kde_curve(random, opts.points);

  double lo = std::min(*std::min_element(actual.begin(), actual.end()),
                       *std::min_element(random.begin(), random.end()));
  double hi = std::max(*std::max_element(actual.begin(), actual.end()),
                       *std::max_element(random.begin(), random.end()));
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const auto hist_a = histogram_range(actual, opts.bins, lo, hi);
  const auto hist_r = histogram_range(random, opts.bins, lo, hi);

  double hist_peak = 0.0;
  for (const auto* hist : {&hist_a, &hist_r}) {
    const std::size_t n = hist == &hist_a ? actual.size() : random.size();
    for (const auto& b : *hist) {
      hist_peak = std::max(hist_peak, static_cast<double>(b.count) /
                                          (static_cast<double>(n) * (b.right - b.left)));
    }
  }
  double kde_peak = 0.0;
  for (const auto* c : {&kde_a, &kde_r}) {
    for (const auto& p : *c) kde_peak = std::max(kde_peak, p.density);
  }
  // Very narrow kernels would flatten everything else; such peaks are clipped.
  const double y1 = 1.05 * std::min(std::max(hist_peak, kde_peak), 4.0 * std::max(hist_peak, 1e-12));

  Frame f{std::min(kde_a.front().x, kde_r.front().x), std::max(kde_a.back().x, kde_r.back().x), y1,
          opts.width - kLeft - kRight, opts.height - kTop - kBottom};

  std::string out;
  appendf(out,
          "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
          "viewBox=\"0 0 %d %d\" font-family=\"sans-serif\" font-size=\"12\">\n",
          opts.width, opts.height, opts.width, opts.height);
  appendf(out, "<rect x=\"0\" y=\"0\" width=\"%d\" height=\"%d\" fill=\"white\"/>\n", opts.width,
          opts.height);
  appendf(out,
          "<defs><clipPath id=\"plot-area\"><rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" "
          "height=\"%.2f\"/></clipPath></defs>\n",
          kLeft, kTop, f.w, f.h);
  if (!opts.title.empty()) {
    appendf(out, "<text x=\"%.2f\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">",
            kLeft + f.w / 2);
    out += xml_escape(opts.title);
    out += "</text>\n";
  }

  out += "<g clip-path=\"url(#plot-area)\">\n";
  draw_histogram(out, f, hist_r, random.size(), kRandomColor);
  draw_histogram(out, f, hist_a, actual.size(), kActualColor);
  draw_curve(out, f, kde_r, kRandomColor);
  draw_curve(out, f, kde_a, kActualColor);
  out += "</g>\n";

  // Axes and ticks.
  const double base_y = kTop + f.h;
  appendf(out,
          "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n"
          "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
          kLeft, base_y, kLeft + f.w, base_y, kLeft, kTop, kLeft, base_y);
  for (int i = 0; i <= 5; ++i) {
    const double xv = f.x0 + (f.x1 - f.x0) * i / 5.0;
    const double xp = f.px(xv);
    appendf(out,
            "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>"
            "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">%.3f</text>\n",
            xp, base_y, xp, base_y + 5, xp, base_y + 18, xv);
    const double yv = f.y1 * i / 5.0;
    const double yp = f.py(yv);
    appendf(out,
            "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>"
            "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\">%.3g</text>\n",
            kLeft - 5, yp, kLeft, yp, kLeft - 8, yp + 4, yv);
  }
  appendf(out, "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">F1-BERTScore</text>\n",
          kLeft + f.w / 2, static_cast<double>(opts.height) - 12);
  appendf(out,
          "<text x=\"16\" y=\"%.2f\" text-anchor=\"middle\" "
          "transform=\"rotate(-90 16 %.2f)\">density</text>\n",
          kTop + f.h / 2, kTop + f.h / 2);

  // Legend.
  const double lx = kLeft + f.w - 150;
  appendf(out,
          "<rect x=\"%.2f\" y=\"%.2f\" width=\"14\" height=\"4\" fill=\"%s\"/>"
          "<text x=\"%.2f\" y=\"%.2f\">actual</text>\n",
          lx, kTop + 8, kActualColor, lx + 20, kTop + 13);
  appendf(out,
          "<rect x=\"%.2f\" y=\"%.2f\" width=\"14\" height=\"4\" fill=\"%s\"/>"
          "<text x=\"%.2f\" y=\"%.2f\">random baseline</text>\n",
          lx, kTop + 26, kRandomColor, lx + 20, kTop + 31);
  out += "</svg>\n";
  return out;
}

void emit_distribution_plot(std::span<const double> actual, std::span<const double> random,
                            const std::filesystem::path& path, const PlotOptions& opts) {
  const auto svg = render_distribution_svg(actual, random, opts);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out.write(svg.data(), static_cast<std::streamsize>(svg.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path.string());
}

}  // namespace tforge::mspt
