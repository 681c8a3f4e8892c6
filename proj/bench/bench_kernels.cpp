#include <benchmark/benchmark.h>

#include <vector>

#include "structiou/ambiguity.hpp"
#include "structiou/metric.hpp"
#include "structiou/random_tree.hpp"

using namespace structiou;

namespace {

struct Corpus {
  std::vector<ParseTree> first;
  std::vector<ParseTree> second;
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    RandomTreeOptions options;
    options.max_nodes = 40;
    for (std::uint64_t k = 0; k < 400; ++k) {
      Rng rng(17, k);
      out.first.push_back(random_timed_tree(rng, options));
      out.second.push_back(random_timed_tree(rng, options));
    }
    return out;
  }();
  return c;
}

void BM_CorpusSerial(benchmark::State& state) {
  const Corpus& c = corpus();
  for (auto _ : state) {
    benchmark::DoNotOptimize(struct_iou_corpus_serial(c.first, c.second, MatchMode::unlabeled).value);
  }
}

void BM_CorpusParallel(benchmark::State& state) {
  const Corpus& c = corpus();
  for (auto _ : state) {
    benchmark::DoNotOptimize(struct_iou_corpus(c.first, c.second, MatchMode::unlabeled).value);
  }
}

AmbiguityOptions ambiguity_options() {
  AmbiguityOptions o;
  o.n = 6;
  o.samples = 100;
  return o;
}

void BM_AmbiguitySerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ambiguity_report_serial(ambiguity_options()).random_struct_iou_mean);
}

void BM_AmbiguityParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ambiguity_report(ambiguity_options()).random_struct_iou_mean);
}

}  // namespace

BENCHMARK(BM_CorpusSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CorpusParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AmbiguitySerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AmbiguityParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
