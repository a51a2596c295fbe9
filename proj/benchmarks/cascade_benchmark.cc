#include <benchmark/benchmark.h>

#include "edam/cascade.h"
#include "synthetic.h"

namespace edam {
namespace {

constexpr size_t kTerms = 2000;

const KnowledgeBase &Kb() {
  static const KnowledgeBase kb = bench::SyntheticKnowledgeBase(kTerms);
  return kb;
}

void BM_ClassifySingle(benchmark::State &state) {
  auto triples = bench::SyntheticTriples(1000, kTerms);
  const KnowledgeBase &kb = Kb();  // build outside the timed loop
  CascadeConfig config;
  config.dbm_max_depth = state.range(0);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Classify(triples[i++ % triples.size()], kb, config));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ClassifySingle)->Arg(0)->Arg(3);

void BM_ClassifyBatch(benchmark::State &state) {
  auto triples = bench::SyntheticTriples(2340, kTerms);
  const KnowledgeBase &kb = Kb();
  for (auto _ : state) {
    auto items = ClassifyBatch(triples, kb, CascadeConfig{}, state.range(0));
    benchmark::DoNotOptimize(items.data());
  }
  state.SetItemsProcessed(state.iterations() * triples.size());
}
BENCHMARK(BM_ClassifyBatch)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace
}  // namespace edam
