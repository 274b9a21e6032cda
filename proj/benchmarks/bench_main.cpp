#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "cooc/degree_dist.hpp"
#include "cooc/metrics.hpp"
#include "cooc/net_build.hpp"
#include "test_support.hpp"

namespace {

const cooc::Corpus& zipf_corpus(std::size_t tokens) {
  static std::map<std::size_t, cooc::Corpus> cache;
  auto it = cache.find(tokens);
  if (it == cache.end()) {
    std::mt19937_64 rng(tokens);
    it = cache.emplace(tokens, cooc::make_corpus(cooc::test::zipf_text(rng, tokens, tokens / 7), "z")).first;
  }
  return it->second;
}

const cooc::WeightedDigraph& zipf_network(std::size_t tokens) {
  static std::map<std::size_t, cooc::WeightedDigraph> cache;
  auto it = cache.find(tokens);
  if (it == cache.end()) {
    cooc::WindowConfig cfg;
    cfg.window = 3;
    it = cache.emplace(tokens, cooc::build_network(zipf_corpus(tokens), cfg).graph).first;
  }
  return it->second;
}

void BM_Tokenize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto text = cooc::test::zipf_text(rng, static_cast<std::size_t>(state.range(0)), 20'000);
  for (auto _ : state) benchmark::DoNotOptimize(cooc::tokenize(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_Tokenize)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_Build(benchmark::State& state) {
  const auto& corpus = zipf_corpus(static_cast<std::size_t>(state.range(0)));
  cooc::WindowConfig cfg;
  cfg.window = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cooc::build_network(corpus, cfg));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * corpus.token_count()));
}
BENCHMARK(BM_Build)->Args({200'000, 2})->Args({200'000, 6})->Unit(benchmark::kMillisecond);

void BM_SampledDistances(benchmark::State& state) {
  const cooc::UndirectedView view(zipf_network(200'000));
  const auto parts = cooc::weak_components(view);
  const auto mode = cooc::DistanceMode::sampled(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(cooc::distance_stats(view, parts, mode));
}
BENCHMARK(BM_SampledDistances)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Clustering(benchmark::State& state) {
  const cooc::UndirectedView view(zipf_network(200'000));
  for (auto _ : state) benchmark::DoNotOptimize(cooc::clustering_coefficients(view));
}
BENCHMARK(BM_Clustering)->Unit(benchmark::kMillisecond);

void BM_PowerLawFit(benchmark::State& state) {
  const cooc::test::PowerLawSampler sampler(2.5, 5, 100'000);
  std::mt19937_64 rng(3);
  cooc::DegreeSequence seq;
  for (std::int64_t i = 0; i < state.range(0); ++i) seq.degrees.push_back(sampler(rng));
  for (auto _ : state) benchmark::DoNotOptimize(cooc::fit_power_law(seq));
}
BENCHMARK(BM_PowerLawFit)->Arg(100'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
