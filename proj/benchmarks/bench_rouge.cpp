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

#include "tforge/metrics.hpp"
#include "tforge/rng.hpp"

namespace {

std::vector<std::string> tokens(tforge::Xoshiro256& rng, std::size_t n) {
  static const std::vector<std::string> vocab = {"egfr", "kinase", "tumor", "cell", "the", "of", "in",
                                                 "resistance", "mutation", "lung"};
  std::vector<std::string> t(n);
  for (auto& x : t) x = vocab[rng.bounded(vocab.size())];
  return t;
}

void BM_RougeN(benchmark::State& state) {
  tforge::Xoshiro256 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = tokens(rng, n), r = tokens(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(tforge::metrics::rouge_n(c, r, 2));
}
BENCHMARK(BM_RougeN)->Arg(8)->Arg(64)->Arg(512);

void BM_RougeL(benchmark::State& state) {
  tforge::Xoshiro256 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = tokens(rng, n), r = tokens(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(tforge::metrics::rouge_l(c, r));
}
BENCHMARK(BM_RougeL)->Arg(8)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
