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

#include <string>

#include "tforge/metrics.hpp"

namespace {

std::string sentence(std::size_t words, std::size_t salt) {
  std::string s;
  for (std::size_t i = 0; i < words; ++i) s += "w" + std::to_string((i * 31 + salt) % 97) + " ";
  return s;
}

void BM_BertScorePair(benchmark::State& state) {
  tforge::metrics::ToyEmbedder toy;
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::vector<std::string> texts = {sentence(n, 1), sentence(n, 2)};
  const auto e = toy.embed(texts);
  for (auto _ : state) benchmark::DoNotOptimize(tforge::metrics::bertscore(e[0], e[1]));
}
BENCHMARK(BM_BertScorePair)->Arg(4)->Arg(16)->Arg(64);

void BM_ToyEmbed(benchmark::State& state) {
  tforge::metrics::ToyEmbedder toy;
  const std::vector<std::string> texts = {sentence(16, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(toy.embed(texts));
}
BENCHMARK(BM_ToyEmbed);

}  // namespace

BENCHMARK_MAIN();
