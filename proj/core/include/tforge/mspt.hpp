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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tforge/dataset.hpp"
#include "tforge/metrics.hpp"

namespace tforge::mspt {

// I_x(a, b) by Lentz's continued fraction, using the symmetry
// I_x(a,b) = 1 - I_{1-x}(b,a) where that converges faster.
double regularized_incomplete_beta(double a, double b, double x);

// P(|T| >= |t|) for Student's t with dof degrees of freedom.
double student_t_two_sided_p(double t, double dof);

struct WelchResult {
  double t_stat = 0.0;
  double dof = 0.0;
  double p_value = 1.0;
  // Both variances are zero: p is 1 if the means agree and 0 otherwise,
  // t is 0 or +-inf, dof is 0.
  bool degenerate = false;
};

// Two-sided Welch t-test with unbiased variances and Welch-Satterthwaite
// dof. Throws Error(kTooFewSamples) when either side has fewer than 2.
WelchResult welch_t_test(std::span<const double> a, std::span<const double> b);

struct MannWhitneyResult {
  double u = 0.0;  // U of sample a
  double z = 0.0;
  double p_value = 1.0;
};

// Two-sided, normal approximation with tie and continuity corrections.
MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

double mean(std::span<const double> xs);

struct KdePoint {
  double x = 0.0;
  double density = 0.0;
};

// 0.9 * min(sd, IQR/1.34) * n^(-1/5). When one spread measure is zero the
// other is used; the result is floored at 1e-6.
double silverman_bandwidth(std::span<const double> samples);

// Gaussian KDE at 'points' equally spaced x over [min - 3h, max + 3h].
// Throws Error(kTooFewSamples) for fewer than 2 samples or points.
std::vector<KdePoint> kde_curve(std::span<const double> samples, std::size_t points);

double trapezoid_integral(std::span<const KdePoint> curve);

struct HistBin {
  double left = 0.0;
  double right = 0.0;
  std::size_t count = 0;
};

// Equal-width bins over [min, max]; bin k holds left_k <= x < right_k, the
// last bin is closed on the right. Constant samples use [v - 0.5, v + 0.5].
// Empty input yields no bins; bins == 0 throws Error(kInvalidArgument).
std::vector<HistBin> histogram(std::span<const double> samples, std::size_t bins);

// Same with an explicit range; samples outside [lo, hi] are ignored.
std::vector<HistBin> histogram_range(std::span<const double> samples, std::size_t bins, double lo,
                                     double hi);

struct PlotOptions {
  std::size_t bins = 20;
  std::size_t points = 256;
  int width = 640;
  int height = 400;
  std::string title;
};

// Self-contained SVG with both histograms and KDE curves; actual in orange,
// baseline in blue. Throws Error(kTooFewSamples) for invalid sample sets.
std::string render_distribution_svg(std::span<const double> actual, std::span<const double> random,
                                    const PlotOptions& opts = {});

void emit_distribution_plot(std::span<const double> actual, std::span<const double> random,
                            const std::filesystem::path& path, const PlotOptions& opts = {});

enum class Test { kWelch, kMannWhitney };

struct MsptOptions {
  Test test = Test::kWelch;
  std::size_t workers = 0;
};

struct MsptReport {
  std::size_t n = 0;
  double mean_actual = 0.0;
  double mean_random = 0.0;
  double gap_pct = 0.0;
  double t_stat = 0.0;
  double dof = 0.0;
  double p_value = 1.0;  // from the selected test
  std::uint64_t seed = 0;
  std::string test = "welch";
  bool degenerate = false;
  std::size_t fixed_points = 0;
  std::string embedder;
  std::optional<MannWhitneyResult> mann_whitney;
};

struct MsptResult {
  MsptReport report;
  std::vector<double> actual;  // per-row BERTScore F1 vs gold
  std::vector<double> random;  // per-row BERTScore F1 vs randomized gold
};

// Scores predictions against gold and against randomize_gold(gold, seed)
// (or against objects drawn from 'pool' when it is non-empty). Each distinct
// text is embedded once.
MsptResult run_mspt(std::span<const dataset::Triple> predictions,
                    std::span<const dataset::Triple> gold, std::uint64_t seed,
                    metrics::EmbeddingProvider& embedder, const MsptOptions& opts = {},
                    std::span<const dataset::Triple> pool = {});

struct BaselineComparison {
  double baseline_p_value = 0.0;
  double baseline_gap_pct = 0.0;
  // baseline p minus this p; descriptive only, not a test statistic.
  double p_value_difference = 0.0;
  double gap_increase = 0.0;
};

BaselineComparison compare_to_baseline(const MsptReport& report,
                                       const std::filesystem::path& baseline_report);

// mspt_report.json plus the two arrays as CSV (row,actual,random), which the
// report references by file name.
void write_mspt_report(const MsptResult& result, const std::filesystem::path& json_path,
                       const std::filesystem::path& arrays_csv,
                       const std::optional<BaselineComparison>& baseline = std::nullopt);

MsptReport read_mspt_report(const std::filesystem::path& json_path);

// Reads the arrays CSV written by write_mspt_report.
void read_mspt_arrays(const std::filesystem::path& arrays_csv, std::vector<double>& actual,
                      std::vector<double>& random);

}  // namespace tforge::mspt
