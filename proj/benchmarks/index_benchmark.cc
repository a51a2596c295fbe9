#include <benchmark/benchmark.h>

#include "edam/vector_space.h"
#include "synthetic.h"

namespace edam {
namespace {

void BM_BuildSpace(benchmark::State &state) {
  auto docs = bench::SyntheticDocuments(state.range(0), 5000);
  for (auto _ : state) {
    auto space = ExplicitVectorSpace::Build(docs);
    benchmark::DoNotOptimize(space.vocabulary_size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildSpace)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_IdfLookup(benchmark::State &state) {
  auto space = ExplicitVectorSpace::Build(bench::SyntheticDocuments(20000, 5000));
  auto lemmas = space.SortedLemmas();
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(space.Idf(lemmas[i++ % lemmas.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_IdfLookup);

void BM_Contains(benchmark::State &state) {
  auto space = ExplicitVectorSpace::Build(bench::SyntheticDocuments(20000, 5000));
  size_t i = 0;
  for (auto _ : state) {
    std::string doc = "t" + std::to_string(i % 10000) + "#0";
    benchmark::DoNotOptimize(space.Contains(bench::Word(i % 50), doc));
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Contains);

void BM_TermVectorCosine(benchmark::State &state) {
  auto space = ExplicitVectorSpace::Build(bench::SyntheticDocuments(20000, 5000));
  size_t i = 0;
  for (auto _ : state) {
    std::string a = "t" + std::to_string(i % 10000);
    std::string b = "t" + std::to_string((i * 7 + 3) % 10000);
    benchmark::DoNotOptimize(
        Cosine(space.Vector(Term{a, a}), space.Vector(Term{b, b})));
    ++i;
  }
}
BENCHMARK(BM_TermVectorCosine);

}  // namespace
}  // namespace edam
