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

#include <gtest/gtest.h>
#include <json.hpp>

#include <cmath>
#include <limits>

#include "tforge/error.hpp"
#include "tforge/mspt.hpp"
#include "tforge/rng.hpp"
#include "test_support.hpp"

using namespace tforge;
using namespace tforge::mspt;
using nlohmann::json;

namespace {

double num(const json& v) {
  return v.is_string() ? std::stod(v.get<std::string>()) : v.get<double>();
}

}  // namespace

TEST(Welch, FiftyCasesMatchHighPrecisionOracle) {
  const auto cases = json::parse(testkit::read_file(testkit::data_dir() / "welch_oracle.json"))["cases"];
  ASSERT_EQ(cases.size(), 50u);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto a = cases[i]["a"].get<std::vector<double>>();
    const auto b = cases[i]["b"].get<std::vector<double>>();
    const auto r = welch_t_test(a, b);
    EXPECT_NEAR(r.t_stat, num(cases[i]["t"]), 1e-10) << "case " << i;
    EXPECT_NEAR(r.dof, num(cases[i]["dof"]), 1e-10) << "case " << i;
    EXPECT_NEAR(r.p_value, num(cases[i]["p"]), 1e-10) << "case " << i;
  }
}

TEST(Welch, FirstCaseByHand) {
  const std::vector<double> a = {1, 2, 3, 4, 5}, b = {2, 3, 4, 5, 6};
  const auto r = welch_t_test(a, b);
  EXPECT_DOUBLE_EQ(r.t_stat, -1.0);
  EXPECT_DOUBLE_EQ(r.dof, 8.0);
}

TEST(Welch, SwapNegatesTExactly) {
  Xoshiro256 rng(31);
  for (int k = 0; k < 100; ++k) {
    std::vector<double> a(2 + rng.bounded(40)), b(2 + rng.bounded(40));
    for (auto& x : a) x = rng.normal();
    for (auto& x : b) x = 0.3 + 2.0 * rng.normal();
    const auto ab = welch_t_test(a, b), ba = welch_t_test(b, a);
    EXPECT_EQ(ab.t_stat, -ba.t_stat);
    EXPECT_EQ(ab.dof, ba.dof);
    EXPECT_EQ(ab.p_value, ba.p_value);
  }
}

TEST(Welch, TenStandardDeviationShiftIsExtreme) {
  Xoshiro256 rng(10);
  std::vector<double> a(200), b(200);
  for (auto& x : a) x = rng.normal();
  for (auto& x : b) x = 10.0 + rng.normal();
  const auto r = welch_t_test(a, b);
  EXPECT_LT(r.p_value, 1e-30);
  EXPECT_GE(r.p_value, 0.0);
}

TEST(Welch, DegenerateAndTooFew) {
  const std::vector<double> c1 = {2, 2, 2}, c2 = {2, 2}, c3 = {3, 3};
  const auto same = welch_t_test(c1, c2);
  EXPECT_TRUE(same.degenerate);
  EXPECT_EQ(same.p_value, 1.0);
  const auto diff = welch_t_test(c1, c3);
  EXPECT_TRUE(diff.degenerate);
  EXPECT_EQ(diff.p_value, 0.0);
  EXPECT_EQ(diff.t_stat, -std::numeric_limits<double>::infinity());
  const std::vector<double> one = {1};
  try {
    welch_t_test(one, c1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooFewSamples);
  }
}

TEST(StudentT, KnownTailValues) {
  // t = 2.228138851986 is the 97.5% point of t with 10 dof.
  EXPECT_NEAR(student_t_two_sided_p(2.228138851986, 10), 0.05, 1e-11);
  EXPECT_NEAR(student_t_two_sided_p(0.0, 5), 1.0, 1e-15);
  // One dof is Cauchy: p = 1 - 2 atan(t) / pi.
  EXPECT_NEAR(student_t_two_sided_p(3.0, 1), 1.0 - 2.0 * std::atan(3.0) / M_PI, 1e-14);
}

TEST(IncompleteBeta, ClosedForms) {
  // I_x(1, b) = 1 - (1 - x)^b and I_x(a, 1) = x^a.
  for (double x : {0.01, 0.3, 0.5, 0.77, 0.99}) {
    EXPECT_NEAR(regularized_incomplete_beta(1.0, 3.5, x), 1.0 - std::pow(1.0 - x, 3.5), 1e-14);
    EXPECT_NEAR(regularized_incomplete_beta(2.5, 1.0, x), std::pow(x, 2.5), 1e-14);
  }
  EXPECT_EQ(regularized_incomplete_beta(2.0, 3.0, 0.0), 0.0);
  EXPECT_EQ(regularized_incomplete_beta(2.0, 3.0, 1.0), 1.0);
}

TEST(MannWhitney, MatchesReference) {
  const auto cases = json::parse(testkit::read_file(testkit::data_dir() / "mannwhitney_ref.json"))["cases"];
  ASSERT_EQ(cases.size(), 5u);
  for (const auto& c : cases) {
    const auto a = c["a"].get<std::vector<double>>();
    const auto b = c["b"].get<std::vector<double>>();
    const auto r = mann_whitney_u(a, b);
    EXPECT_NEAR(r.u, c["u"].get<double>(), 1e-9);
    EXPECT_NEAR(r.p_value, c["p"].get<double>(), 1e-10);
  }
}

TEST(Mean, Simple) {
  const std::vector<double> v = {1, 2, 3, 4};
  EXPECT_EQ(mean(v), 2.5);
}
