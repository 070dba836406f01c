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

#include <benchmark/benchmark.h>

#include "tforge/mspt.hpp"
#include "tforge/rng.hpp"

namespace {

void BM_Welch(benchmark::State& state) {
  tforge::Xoshiro256 rng(3);
  std::vector<double> a(static_cast<std::size_t>(state.range(0))), b(a.size());
  for (auto& x : a) x = rng.normal();
  for (auto& x : b) x = 0.1 + rng.normal();
  for (auto _ : state) benchmark::DoNotOptimize(tforge::mspt::welch_t_test(a, b));
}
BENCHMARK(BM_Welch)->Arg(200)->Arg(1000)->Arg(10000);

void BM_StudentTail(benchmark::State& state) {
  double t = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tforge::mspt::student_t_two_sided_p(t, 57.3));
    t = t < 8.0 ? t + 0.01 : 0.5;
  }
}
BENCHMARK(BM_StudentTail);

}  // namespace

BENCHMARK_MAIN();
