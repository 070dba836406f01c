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

#include "tforge/corpus.hpp"
#include "tforge/relevance.hpp"
#include "tforge/rng.hpp"

namespace {

std::vector<tforge::corpus::Document> synthetic_corpus(std::size_t n) {
  static const std::vector<std::string> words = {"egfr", "lung", "cancer", "kinase", "heart", "failure",
                                                 "cohort", "tumor", "therapy", "blood", "pressure",
                                                 "mutation", "patients", "trial", "dose"};
  tforge::Xoshiro256 rng(7);
  std::vector<tforge::corpus::Document> docs(n);
  for (std::size_t i = 0; i < n; ++i) {
    docs[i].id = "PMC" + std::to_string(100000 + i);
    docs[i].title = words[rng.bounded(words.size())];
    for (int w = 0; w < 200; ++w) docs[i].body += words[rng.bounded(words.size())] + " ";
  }
  return docs;
}

void BM_KnnFilter(benchmark::State& state) {
  const auto docs = synthetic_corpus(static_cast<std::size_t>(state.range(0)));
  const tforge::relevance::TermQuery query({"egfr", "lung cancer", "kinase"});
  const auto vocab = tforge::relevance::build_vocabulary(docs, 1, &query);
  tforge::relevance::KnnOptions opts;
  opts.workers = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tforge::relevance::knn_filter(docs, query, vocab, 20, opts));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_KnnFilter)->Args({1000, 1})->Args({1000, 4})->Args({5000, 4});

}  // namespace

BENCHMARK_MAIN();
