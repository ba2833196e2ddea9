#include <benchmark/benchmark.h>

#include "codelattice/constructions.hpp"
#include "codelattice/gadgets.hpp"

using namespace codelattice;

static void BM_GolayMinDistance(benchmark::State& state) {
  const Code golay = extended_golay_code();
  for (auto _ : state) benchmark::DoNotOptimize(min_distance(golay));
}
BENCHMARK(BM_GolayMinDistance);

static void BM_GolayMinWeightCodewords(benchmark::State& state) {
  const Code golay = extended_golay_code();
  for (auto _ : state) benchmark::DoNotOptimize(min_weight_codewords(golay));
}
BENCHMARK(BM_GolayMinWeightCodewords);

static void BM_HnfGolayOctads(benchmark::State& state) {
  const Code golay = extended_golay_code();
  for (auto _ : state) benchmark::DoNotOptimize(simplified_d(golay));
}
BENCHMARK(BM_HnfGolayOctads)->Unit(benchmark::kMillisecond);

static void BM_LllCor23(benchmark::State& state) {
  const Lattice l = build_cor23().lattice;
  for (auto _ : state) benchmark::DoNotOptimize(lll_reduce(l));
}
BENCHMARK(BM_LllCor23)->Unit(benchmark::kMillisecond);

static void BM_ShortestVectorsCor25(benchmark::State& state) {
  const Lattice l = simplified_d(Code(cor25_gadget(state.range(0)).gm()));
  for (auto _ : state) benchmark::DoNotOptimize(shortest_vectors(l));
}
BENCHMARK(BM_ShortestVectorsCor25)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_TernarySearchCor23(benchmark::State& state) {
  const Thm22Instance inst = build_cor23();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ternary_sign_search(inst.lattice, inst.code, 4, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_TernarySearchCor23)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_DBarLatticeCheck(benchmark::State& state) {
  const CodeTower tower({reed_muller_code(2, 4), reed_muller_code(1, 4)});
  for (auto _ : state) benchmark::DoNotOptimize(d_bar_is_lattice(tower));
}
BENCHMARK(BM_DBarLatticeCheck)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
