#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "wordspot/matching.hpp"
#include "wordspot/pipeline.hpp"
#include "wordspot/preprocess.hpp"
#include "wordspot/render.hpp"
#include "wordspot/weighting.hpp"

using namespace wordspot;

namespace {

FeatureDatabase random_db(std::size_t n, std::size_t dim) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> rows(n, std::vector<double>(dim));
  for (auto& r : rows)
    for (auto& v : r) v = u(rng);
  return database_from_rows(rows);
}

void BM_ExtractFeatures(benchmark::State& state) {
  auto word = skeletonize(mean_filter(render_word("retrieval", Font::A, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(extract_features(word));
}
BENCHMARK(BM_ExtractFeatures);

void BM_PreprocessPage(benchmark::State& state) {
  CorpusSpec spec = standard_corpus_spec();
  spec.pages = 1;
  auto page = to_gray(render_corpus(spec).pages[0].image);
  for (auto _ : state) benchmark::DoNotOptimize(preprocess(page));
}
BENCHMARK(BM_PreprocessPage);

void BM_IndexPage(benchmark::State& state) {
  CorpusSpec spec = standard_corpus_spec();
  spec.pages = 1;
  auto page = to_gray(render_corpus(spec).pages[0].image);
  for (auto _ : state) benchmark::DoNotOptimize(index_page(page, "p"));
}
BENCHMARK(BM_IndexPage);

void BM_ComputeWeights(benchmark::State& state) {
  auto db = random_db(static_cast<std::size_t>(state.range(0)), kFeatureDim);
  for (auto _ : state) benchmark::DoNotOptimize(compute_weights(correlation_matrix(db)));
}
BENCHMARK(BM_ComputeWeights)->Arg(1200)->Arg(10000);

void BM_RecursiveLambda(benchmark::State& state) {
  auto db = random_db(1200, static_cast<std::size_t>(state.range(0)));
  auto cm = correlation_matrix(db);
  for (auto _ : state) benchmark::DoNotOptimize(multiple_correlation_recursive(cm, 0));
}
BENCHMARK(BM_RecursiveLambda)->Arg(10)->Arg(30)->Arg(93);

void BM_RankQuery(benchmark::State& state) {
  auto db = random_db(static_cast<std::size_t>(state.range(0)), kFeatureDim);
  auto w = uniform_weights(kFeatureDim);
  auto q = db[0].features;
  for (auto _ : state) benchmark::DoNotOptimize(rank_query(q, db, w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RankQuery)->Arg(1200)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
