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
#include <numbers>
#include <vector>

#include "tforge/error.hpp"
#include "tforge/mspt.hpp"

namespace tforge::mspt {
namespace {

constexpr double kMinBandwidth = 1e-6;

// Linear-interpolation quantile on sorted data.
double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

double silverman_bandwidth(std::span<const double> samples) {
  if (samples.size() < 2) throw Error(ErrorCode::kTooFewSamples, "bandwidth needs >= 2 samples");
  const double m = mean(samples);
  double ss = 0.0;
  for (double x : samples) ss += (x - m) * (x - m);
  const double sd = std::sqrt(ss / static_cast<double>(samples.size() - 1));
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double iqr = (quantile(sorted, 0.75) - quantile(sorted, 0.25)) / 1.34;
  double spread = std::min(sd, iqr);
  if (spread <= 0.0) spread = std::max(sd, iqr);
  const double h = 0.9 * spread * std::pow(static_cast<double>(samples.size()), -0.2);
  return std::max(h, kMinBandwidth);
}

std::vector<KdePoint> kde_curve(std::span<const double> samples, std::size_t points) {
  if (samples.size() < 2) throw Error(ErrorCode::kTooFewSamples, "KDE needs >= 2 samples");
  if (points < 2) throw Error(ErrorCode::kTooFewSamples, "KDE needs >= 2 grid points");
  const double h = silverman_bandwidth(samples);
  const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  const double lo = *lo_it - 3.0 * h;
  const double hi = *hi_it + 3.0 * h;
  const double step = (hi - lo) / static_cast<double>(points - 1);
  const double norm =
      1.0 / (static_cast<double>(samples.size()) * h * std::sqrt(2.0 * std::numbers::pi));
  std::vector<KdePoint> curve(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double x = i + 1 == points ? hi : lo + step * static_cast<double>(i);
    double s = 0.0;
    for (double xi : samples) {
      const double u = (x - xi) / h;
      s += std::exp(-0.5 * u * u);
    }
    curve[i] = {x, s * norm};
  }
  return curve;
}

double trapezoid_integral(std::span<const KdePoint> curve) {
  double area = 0.0;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    area += 0.5 * (curve[i].density + curve[i - 1].density) * (curve[i].x - curve[i - 1].x);
  }
  return area;
}

std::vector<HistBin> histogram_range(std::span<const double> samples, std::size_t bins, double lo,
                                     double hi) {
  if (bins == 0) throw Error(ErrorCode::kInvalidArgument, "histogram needs >= 1 bin");
  if (!(hi > lo)) throw Error(ErrorCode::kInvalidArgument, "histogram range is empty");
  const double width = (hi - lo) / static_cast<double>(bins);
  std::vector<HistBin> out(bins);
  for (std::size_t k = 0; k < bins; ++k) {
    out[k].left = lo + width * static_cast<double>(k);
    out[k].right = k + 1 == bins ? hi : lo + width * static_cast<double>(k + 1);
  }
  for (double x : samples) {
    if (!(x >= lo && x <= hi)) continue;
    auto k = static_cast<std::size_t>(
        std::min(std::floor((x - lo) / width), static_cast<double>(bins - 1)));
    // Settle rounding at the edges against the stored bounds.
    while (k > 0 && x < out[k].left) --k;
    while (k + 1 < bins && x >= out[k].right) ++k;
    ++out[k].count;
  }
  return out;
}

std::vector<HistBin> histogram(std::span<const double> samples, std::size_t bins) {
  if (bins == 0) throw Error(ErrorCode::kInvalidArgument, "histogram needs >= 1 bin");
  if (samples.empty()) return {};
  const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  double lo = *lo_it, hi = *hi_it;
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  return histogram_range(samples, bins, lo, hi);
}

}  // namespace tforge::mspt
