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

// tforge: command line front end for the triplet pipeline and the
// evaluation harness. Exit codes: 0 ok, 1 stage error, 2 usage error,
// 3 significance gate failed (mspt --assert-significant).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "tforge/corpus.hpp"
#include "tforge/dataset.hpp"
#include "tforge/error.hpp"
#include "tforge/extraction.hpp"
#include "tforge/license.hpp"
#include "tforge/metrics.hpp"
#include "tforge/mspt.hpp"
#include "tforge/nerfilter.hpp"
#include "tforge/pipeline.hpp"
#include "tforge/relevance.hpp"
#include "tforge/text.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace tforge;

namespace {

constexpr int kStageError = 1;
constexpr int kSignificanceGate = 3;

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

void print_manifest(const pipeline::FunnelManifest& m) {
  auto cell = [](const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  std::printf("%-11s %9s %9s %9s %9s %8s %s\n", "stage", "art_in", "art_out", "trip_in",
              "trip_out", "time_s", "cached");
  for (const auto& s : m.stages) {
    std::printf("%-11s %9s %9s %9s %9s %8.2f %s\n", s.stage.c_str(), cell(s.articles_in).c_str(),
                cell(s.articles_out).c_str(), cell(s.triplets_in).c_str(),
                cell(s.triplets_out).c_str(), s.wall_time_s, s.cached ? "yes" : "no");
  }
}

std::vector<dataset::Triple> read_records(const fs::path& path) {
  if (path.extension() == ".csv") return dataset::read_split_csv(path);
  std::vector<dataset::Triple> rows;
  for (const auto& t : extraction::read_triplets(path)) rows.push_back(dataset::to_triple(t));
  return rows;
}

struct EmbedderChoice {
  std::string kind = "http";
  std::string url;
  std::size_t toy_dim = 256;

  std::unique_ptr<metrics::EmbeddingProvider> make() const {
    if (kind == "toy") return std::make_unique<metrics::ToyEmbedder>(toy_dim);
    metrics::HttpEmbedderConfig c;
    c.url = env_or("TF_EMBED_URL", url);
    if (c.url.empty()) {
      throw Error(ErrorCode::kConfig, "no embedding service: pass --embed-url or set TF_EMBED_URL");
    }
    return std::make_unique<metrics::HttpEmbedder>(c);
  }
};

void add_embedder_options(CLI::App* cmd, EmbedderChoice& e) {
  cmd->add_option("--embedder", e.kind, "Embedding provider")
      ->check(CLI::IsMember({"http", "toy"}))
      ->capture_default_str();
  cmd->add_option("--embed-url", e.url, "Embedding service root (TF_EMBED_URL overrides)");
  cmd->add_option("--toy-dim", e.toy_dim, "Vector size of the toy embedder")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knowledge-base triplet pipeline and evaluation harness"};
  app.require_subcommand(0, 1);
  std::string check_config;
  bool check_services = false;
  app.add_flag("--check-services", check_services, "Probe the configured HTTP services and exit");
  app.add_option("--config", check_config, "Pipeline config used by --check-services");
  std::size_t workers = 0;
  app.add_option("--workers", workers, "Worker threads (0 = CPU count)");

  // run
  auto* run = app.add_subcommand("run", "Run every pipeline stage from a config file");
  std::string run_config, run_from = "ingest", run_to = "split";
  run->add_option("--config", run_config, "pipeline.ini")->required()->check(CLI::ExistingFile);
  run->add_option("--from", run_from, "First stage")
      ->check(CLI::IsMember(pipeline::stage_names()))
      ->capture_default_str();
  run->add_option("--to", run_to, "Last stage")
      ->check(CLI::IsMember(pipeline::stage_names()))
      ->capture_default_str();

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Parse a corpus directory into documents.jsonl");
  std::string ingest_root, ingest_out, ingest_skips;
  bool abstracts_only = false;
  ingest->add_option("--root", ingest_root, "Corpus directory")->required()->check(CLI::ExistingDirectory);
  ingest->add_option("--out", ingest_out, "Documents JSON lines")->required();
  ingest->add_option("--skip-log", ingest_skips, "Skip records JSON lines");
  ingest->add_flag("--abstracts-only", abstracts_only, "Keep abstract paragraphs only");

  // relevance
  auto* rel = app.add_subcommand("relevance", "Rank documents against query terms (TF-IDF kNN)");
  std::string rel_in, rel_out, rel_docs;
  std::vector<std::string> rel_terms;
  std::size_t rel_top_k = 40000, rel_min_df = 1;
  std::optional<double> rel_min_score;
  rel->add_option("--in", rel_in, "Documents JSON lines")->required()->check(CLI::ExistingFile);
  rel->add_option("--term", rel_terms, "Query term (repeatable)")->required();
  rel->add_option("--top-k", rel_top_k, "Number of documents to keep")->capture_default_str();
  rel->add_option("--min-score", rel_min_score, "Drop documents below this cosine score");
  rel->add_option("--min-df", rel_min_df, "Minimum document frequency")->capture_default_str();
  rel->add_option("--out", rel_out, "Ranked CSV doc_id,score")->required();
  rel->add_option("--out-docs", rel_docs, "Selected documents JSON lines");

  // license
  auto* lic = app.add_subcommand("license", "Keep documents whose license is allowed");
  std::string lic_in, lic_out, lic_cache, lic_url, lic_key;
  std::vector<std::string> lic_allowed = {"CC0"};
  bool lic_offline = false;
  lic->add_option("--in", lic_in, "Documents JSON lines")->required()->check(CLI::ExistingFile);
  lic->add_option("--out", lic_out, "Kept documents JSON lines")->required();
  lic->add_option("--allowed", lic_allowed, "Allowed licenses")->capture_default_str();
  lic->add_option("--cache", lic_cache, "Registry cache JSON lines")->required();
  lic->add_option("--registry-url", lic_url, "License registry endpoint");
  lic->add_option("--api-key", lic_key, "Registry API key");
  lic->add_flag("--offline", lic_offline, "Never contact the registry");

  // extract
  auto* ext = app.add_subcommand("extract", "Extract triplets from documents");
  std::string ext_in, ext_out, ext_backend = "naive", ext_url, ext_replay, ext_record;
  double ext_min_conf = 0.0;
  bool ext_resume = false;
  ext->add_option("--in", ext_in, "Documents JSON lines")->required()->check(CLI::ExistingFile);
  ext->add_option("--out", ext_out, "Triplets JSON lines")->required();
  ext->add_option("--backend", ext_backend, "Extractor")
      ->check(CLI::IsMember({"naive", "remote", "replay"}))
      ->capture_default_str();
  ext->add_option("--openie-url", ext_url, "Annotation server root (TF_OPENIE_URL overrides)");
  ext->add_option("--replay", ext_replay, "Recording to replay");
  ext->add_option("--record", ext_record, "Append backend answers to this recording");
  ext->add_option("--min-confidence", ext_min_conf, "Drop triplets below this confidence")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  ext->add_flag("--resume", ext_resume, "Continue an interrupted run");

  // ner-filter
  auto* nerf = app.add_subcommand("ner-filter", "Score entity probabilities and filter triplets");
  std::string ner_in, ner_out, ner_scored, ner_kb, ner_scorer = "http", ner_url, ner_table, ner_cache;
  double ner_threshold = 0.8;
  std::size_t ner_batch = 32;
  nerf->add_option("--in", ner_in, "Triplets JSON lines")->required()->check(CLI::ExistingFile);
  nerf->add_option("--out", ner_out, "Kept triplets JSON lines")->required();
  nerf->add_option("--scored", ner_scored, "Scored triplets JSON lines");
  nerf->add_option("--kb", ner_kb, "Deduplicated kept triplets JSON lines");
  nerf->add_option("--scorer", ner_scorer, "Entity scorer")
      ->check(CLI::IsMember({"http", "stub", "table"}))
      ->capture_default_str();
  nerf->add_option("--ner-url", ner_url, "Model service root (TF_NER_URL overrides)");
  nerf->add_option("--table", ner_table, "Lexicon JSON lines for --scorer table");
  nerf->add_option("--cache", ner_cache, "Phrase score cache JSON lines");
  nerf->add_option("--threshold", ner_threshold, "Keep when both probabilities exceed this")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  nerf->add_option("--batch-size", ner_batch, "Phrases per request")->capture_default_str();

  // split
  auto* spl = app.add_subcommand("split", "Shuffle and split triplets into CSV files");
  std::string spl_in, spl_dir;
  dataset::SplitSpec spec;
  spl->add_option("--in", spl_in, "Triplets (.jsonl or .csv)")->required()->check(CLI::ExistingFile);
  spl->add_option("--out-dir", spl_dir, "Directory for train/test/validation.csv")->required();
  spl->add_option("--train", spec.train)->capture_default_str();
  spl->add_option("--test", spec.test)->capture_default_str();
  spl->add_option("--validation", spec.validation)->capture_default_str();
  spl->add_option("--seed", spec.seed)->capture_default_str();

  // randomize
  auto* rnd = app.add_subcommand("randomize", "Permute the object column of a gold CSV");
  std::string rnd_in, rnd_out, rnd_pool;
  std::uint64_t rnd_seed = 0;
  rnd->add_option("--in", rnd_in, "Gold CSV")->required()->check(CLI::ExistingFile);
  rnd->add_option("--out", rnd_out, "Randomized CSV")->required();
  rnd->add_option("--seed", rnd_seed)->required();
  rnd->add_option("--pool", rnd_pool, "Draw objects from this CSV instead")->check(CLI::ExistingFile);

  // eval
  auto* evl = app.add_subcommand("eval", "ROUGE and BERTScore of predictions against gold");
  std::string evl_pred, evl_gold, evl_out = "eval_report.json", evl_csv;
  EmbedderChoice evl_emb;
  evl->add_option("--pred", evl_pred, "Predictions CSV")->required()->check(CLI::ExistingFile);
  evl->add_option("--gold", evl_gold, "Gold CSV")->required()->check(CLI::ExistingFile);
  evl->add_option("--out", evl_out, "Report JSON")->capture_default_str();
  evl->add_option("--csv", evl_csv, "Per-row CSV mirror (default: report name with .csv)");
  add_embedder_options(evl, evl_emb);

  // mspt
  auto* msp = app.add_subcommand("mspt", "Selectional preference test against randomized gold");
  std::string msp_pred, msp_gold, msp_dir = ".", msp_pool, msp_baseline, msp_test = "welch";
  std::uint64_t msp_seed = 0;
  double msp_alpha = 0.05;
  bool msp_assert = false;
  EmbedderChoice msp_emb;
  msp->add_option("--pred", msp_pred, "Predictions CSV")->required()->check(CLI::ExistingFile);
  msp->add_option("--gold", msp_gold, "Gold CSV")->required()->check(CLI::ExistingFile);
  msp->add_option("--seed", msp_seed, "Randomization seed")->required();
  msp->add_option("--out-dir", msp_dir, "Output directory")->capture_default_str();
  msp->add_option("--test", msp_test, "Significance test")
      ->check(CLI::IsMember({"welch", "mann-whitney"}))
      ->capture_default_str();
  msp->add_option("--pool", msp_pool, "Draw randomized objects from this CSV")
      ->check(CLI::ExistingFile);
  msp->add_option("--baseline-report", msp_baseline, "Earlier mspt_report.json to compare with")
      ->check(CLI::ExistingFile);
  msp->add_flag("--assert-significant", msp_assert, "Exit 3 when p exceeds --alpha");
  msp->add_option("--alpha", msp_alpha, "Significance level")->capture_default_str();
  add_embedder_options(msp, msp_emb);

  // plot
  auto* plt = app.add_subcommand("plot", "Render histogram and KDE curves as SVG");
  std::string plt_arrays, plt_out, plt_title;
  mspt::PlotOptions plot_opts;
  plt->add_option("--arrays", plt_arrays, "mspt arrays CSV")->required()->check(CLI::ExistingFile);
  plt->add_option("--out", plt_out, "SVG path")->required();
  plt->add_option("--bins", plot_opts.bins)->capture_default_str();
  plt->add_option("--points", plot_opts.points)->capture_default_str();
  plt->add_option("--title", plot_opts.title);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (check_services) {
      if (check_config.empty()) {
        std::cerr << "--check-services needs --config\n";
        return 2;
      }
      const auto config = pipeline::load_config(check_config);
      const auto statuses = pipeline::check_services(config);
      bool all_ok = true;
      for (const auto& s : statuses) {
        std::printf("%-7s %-4s %s  %s\n", s.name.c_str(), s.ok ? "ok" : "FAIL", s.url.c_str(),
                    s.detail.c_str());
        all_ok = all_ok && s.ok;
      }
      if (statuses.empty()) std::printf("no HTTP services configured\n");
      return all_ok ? 0 : kStageError;
    }
    if (app.get_subcommands().empty()) {
      std::cout << app.help();
      return 2;
    }

    if (*run) {
      auto config = pipeline::load_config(run_config);
      if (workers) config.workers = workers;
      pipeline::FunnelManifest m;
      if (run_from == "ingest" && run_to == "split") {
        m = pipeline::run_pipeline(config);
      } else {
        m = pipeline::run_stages(config, run_from, run_to);
        pipeline::write_manifest(m, config.work_dir / "funnel_manifest.json");
      }
      print_manifest(m);
    } else if (*ingest) {
      corpus::LoadOptions opts;
      opts.parse.abstracts_only = abstracts_only;
      opts.workers = workers;
      const auto c = corpus::load_corpus(ingest_root, opts);
      corpus::write_documents(ingest_out, c.documents);
      if (!ingest_skips.empty()) corpus::write_skip_log(ingest_skips, c.skipped);
      std::printf("files %zu, documents %zu, skipped %zu\n", c.stats.files, c.stats.yielded,
                  c.stats.skipped);
    } else if (*rel) {
      const auto docs = corpus::read_documents(rel_in);
      const relevance::TermQuery query(rel_terms);
      const auto vocab = relevance::build_vocabulary(docs, rel_min_df, &query);
      relevance::KnnOptions opts;
      opts.workers = workers;
      opts.min_score = rel_min_score;
      const auto ranked = relevance::knn_filter(docs, query, vocab, rel_top_k, opts);
      relevance::write_ranked_csv(rel_out, ranked);
      if (!rel_docs.empty()) {
        std::map<std::string, const corpus::Document*> by_id;
        for (const auto& d : docs) by_id[d.id] = &d;
        std::vector<corpus::Document> kept;
        for (const auto& r : ranked) kept.push_back(*by_id.at(r.id));
        corpus::write_documents(rel_docs, kept);
      }
      std::printf("documents %zu, selected %zu (top_k %zu, min_score %s)\n", docs.size(),
                  ranked.size(), rel_top_k,
                  rel_min_score ? std::to_string(*rel_min_score).c_str() : "none");
    } else if (*lic) {
      std::set<corpus::LicenseTag> allowed;
      for (const auto& name : lic_allowed) {
        const auto tag = corpus::parse_license_name(name);
        if (!tag) throw Error(ErrorCode::kConfig, "unknown license '" + name + "'");
        allowed.insert(*tag);
      }
      license::RegistryConfig rc;
      rc.base_url = lic_url;
      rc.api_key = lic_key;
      rc.offline = lic_offline;
      license::RegistryLicenseResolver resolver(rc, lic_cache);
      auto result = license::filter_by_license(corpus::read_documents(lic_in), allowed, resolver);
      corpus::write_documents(lic_out, result.kept);
      std::printf("input %zu, kept %zu, registry lookups %zu\n", result.funnel.input,
                  result.funnel.kept, result.funnel.resolved_by_registry);
    } else if (*ext) {
      const auto docs = corpus::read_documents(ext_in);
      std::unique_ptr<extraction::ExtractorBackend> backend;
      if (ext_backend == "remote") {
        extraction::RemoteConfig rc;
        rc.url = env_or("TF_OPENIE_URL", ext_url);
        backend = std::make_unique<extraction::RemoteBackend>(rc);
      } else if (ext_backend == "replay") {
        if (ext_replay.empty()) throw Error(ErrorCode::kConfig, "--backend replay needs --replay");
        backend = std::make_unique<extraction::ReplayBackend>(ext_replay);
      } else {
        backend = std::make_unique<extraction::NaiveBackend>();
      }
      std::unique_ptr<extraction::RecordingBackend> recorder;
      extraction::ExtractorBackend* active = backend.get();
      if (!ext_record.empty()) {
        recorder = std::make_unique<extraction::RecordingBackend>(*backend, ext_record);
        active = recorder.get();
      }
      extraction::ExtractOptions opts;
      opts.min_confidence = ext_min_conf;
      opts.workers = workers;
      const auto s = extraction::extract_corpus(docs, *active, ext_out, opts, ext_resume);
      std::printf("documents %zu (resumed %zu), sentences %zu, triplets %zu, failed sentences %zu, "
                  "below confidence %zu\n",
                  s.documents, s.resumed_documents, s.sentences, s.triplets, s.failed_sentences,
                  s.below_min_confidence);
    } else if (*nerf) {
      const auto triplets = extraction::read_triplets(ner_in);
      std::unique_ptr<ner::EntityScorer> scorer;
      if (ner_scorer == "table") {
        if (ner_table.empty()) throw Error(ErrorCode::kConfig, "--scorer table needs --table");
        scorer = std::make_unique<ner::TableScorer>(ner_table);
      } else if (ner_scorer == "stub") {
        scorer = std::make_unique<ner::HashStubScorer>();
      } else {
        ner::HttpScorerConfig hc;
        hc.url = env_or("TF_NER_URL", ner_url);
        scorer = std::make_unique<ner::HttpEntityScorer>(hc);
      }
      std::unique_ptr<ner::PhraseCache> cache;
      if (!ner_cache.empty()) cache = std::make_unique<ner::PhraseCache>(ner_cache);
      ner::ScoreOptions so;
      so.batch_size = ner_batch;
      ner::ScoreStats stats;
      const auto scored = ner::score_triplets(triplets, *scorer, so, cache.get(), &stats);
      if (!ner_scored.empty()) ner::write_scored(ner_scored, scored);
      ner::FilterFunnel funnel;
      const auto kept = ner::filter_scored(scored, ner_threshold, &funnel);
      extraction::write_triplets(ner_out, kept);
      std::size_t unique = kept.size();
      if (!ner_kb.empty()) {
        const auto kb = ner::dedup_triplets(kept);
        extraction::write_triplets(ner_kb, kb);
        unique = kb.size();
      }
      std::printf("input %zu, kept %zu, rejected %zu, unique kept %zu, phrases %zu (cached %zu)\n",
                  funnel.input, funnel.kept, funnel.rejected, unique, stats.unique_phrases,
                  stats.cache_hits);
    } else if (*spl) {
      const auto parts = dataset::shuffle_and_split(read_records(spl_in), spec);
      fs::create_directories(spl_dir);
      dataset::write_split_csv(parts.train, fs::path(spl_dir) / "train.csv");
      dataset::write_split_csv(parts.test, fs::path(spl_dir) / "test.csv");
      dataset::write_split_csv(parts.validation, fs::path(spl_dir) / "validation.csv");
      const json manifest = {{"seed", spec.seed},
                             {"prng", "xoshiro256** seeded by splitmix64"},
                             {"train", parts.train.size()},
                             {"test", parts.test.size()},
                             {"validation", parts.validation.size()}};
      std::ofstream(fs::path(spl_dir) / "split.json") << manifest.dump(1) << '\n';
      std::printf("train %zu, test %zu, validation %zu (seed %llu)\n", parts.train.size(),
                  parts.test.size(), parts.validation.size(),
                  static_cast<unsigned long long>(spec.seed));
    } else if (*rnd) {
      const auto gold = dataset::read_split_csv(rnd_in);
      const auto r = rnd_pool.empty()
                         ? dataset::randomize_gold(gold, rnd_seed)
                         : dataset::randomize_gold_from_pool(gold, dataset::read_split_csv(rnd_pool),
                                                             rnd_seed);
      dataset::write_split_csv(r.records, rnd_out);
      const json manifest = {{"seed", rnd_seed},
                             {"n", gold.size()},
                             {"source", rnd_pool.empty() ? "evaluated set" : "pool"},
                             {"fixed_points", r.fixed_points},
                             {"unchanged_objects", r.unchanged_objects},
                             {"permutation", r.permutation}};
      std::ofstream(rnd_out + ".json") << manifest.dump(1) << '\n';
      std::printf("rows %zu, fixed points %zu, unchanged objects %zu\n", gold.size(),
                  r.fixed_points, r.unchanged_objects);
    } else if (*evl) {
      auto embedder = evl_emb.make();
      const auto report = metrics::evaluate_file(evl_pred, evl_gold, *embedder, workers);
      const auto csv = evl_csv.empty() ? fs::path(evl_out).replace_extension(".csv") : fs::path(evl_csv);
      metrics::write_eval_report(report, evl_out, csv);
      const auto& a = report.aggregate;
      std::printf("rows %zu\nROUGE-1   P %.4f R %.4f F1 %.4f\nROUGE-2   P %.4f R %.4f F1 %.4f\n"
                  "ROUGE-L   P %.4f R %.4f F1 %.4f\nBERTScore P %.4f R %.4f F1 %.4f\n",
                  report.rows.size(), a.rouge1.precision, a.rouge1.recall, a.rouge1.f1,
                  a.rouge2.precision, a.rouge2.recall, a.rouge2.f1, a.rougeL.precision,
                  a.rougeL.recall, a.rougeL.f1, a.bertscore.precision, a.bertscore.recall,
                  a.bertscore.f1);
    } else if (*msp) {
      auto embedder = msp_emb.make();
      const auto pred = dataset::read_split_csv(msp_pred);
      const auto gold = dataset::read_split_csv(msp_gold);
      std::vector<dataset::Triple> pool;
      if (!msp_pool.empty()) pool = dataset::read_split_csv(msp_pool);
      mspt::MsptOptions opts;
      opts.test = msp_test == "mann-whitney" ? mspt::Test::kMannWhitney : mspt::Test::kWelch;
      opts.workers = workers;
      const auto result = mspt::run_mspt(pred, gold, msp_seed, *embedder, opts, pool);
      std::optional<mspt::BaselineComparison> baseline;
      if (!msp_baseline.empty()) baseline = mspt::compare_to_baseline(result.report, msp_baseline);
      const fs::path dir(msp_dir);
      fs::create_directories(dir);
      mspt::write_mspt_report(result, dir / "mspt_report.json", dir / "mspt_arrays.csv", baseline);
      mspt::emit_distribution_plot(result.actual, result.random, dir / "mspt_plot.svg");
      const auto& r = result.report;
      std::printf("n %zu, mean_actual %.6f, mean_random %.6f, gap %.4f pp, t %.4f, dof %.2f, "
                  "p %.3g (%s)\n",
                  r.n, r.mean_actual, r.mean_random, r.gap_pct, r.t_stat, r.dof, r.p_value,
                  r.test.c_str());
      if (msp_assert && !(r.p_value <= msp_alpha)) {
        std::fprintf(stderr, "p = %.3g exceeds alpha %.3g\n", r.p_value, msp_alpha);
        return kSignificanceGate;
      }
    } else if (*plt) {
      std::vector<double> actual, random;
      mspt::read_mspt_arrays(plt_arrays, actual, random);
      mspt::emit_distribution_plot(actual, random, plt_out, plot_opts);
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kStageError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kStageError;
  }
  return 0;
}
