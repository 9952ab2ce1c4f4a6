// Parallel kernels against their serial reference versions.

#include <benchmark/benchmark.h>

#include "swalk/checks.hpp"
#include "swalk/corpus.hpp"
#include "swalk/realize.hpp"
#include "swalk/reference.hpp"

using namespace swalk;

namespace {

// K4 plus a loop and a parallel edge; e01 negative.
GraphPtr bench_graph() {
  static const auto g = build_graph({"v0", "v1", "v2", "v3"}, {{"e01", "v0", "v1"},
                                                               {"e01_1", "v0", "v1"},
                                                               {"e02", "v0", "v2"},
                                                               {"e03", "v0", "v3"},
                                                               {"e12", "v1", "v2"},
                                                               {"e13", "v1", "v3"},
                                                               {"e23", "v2", "v3"},
                                                               {"e33", "v3", "v3"}});
  return g;
}

WalkSetOracle bench_oracle() {
  const auto g = bench_graph();
  return build_section2_oracle(Signature::all_plus(g).with(*g->find_edge("e01"), Sign::minus), vertex_at(0));
}

void BM_three_walk_parallel(benchmark::State& state) {
  const auto o = bench_oracle();
  for (auto _ : state) benchmark::DoNotOptimize(check_exclusive_3walk(o, state.range(0)));
}

void BM_three_walk_reference(benchmark::State& state) {
  const auto o = bench_oracle();
  for (auto _ : state) benchmark::DoNotOptimize(reference::check_exclusive_3walk(o, state.range(0)));
}

void BM_rotation_parallel(benchmark::State& state) {
  const auto o = bench_oracle();
  for (auto _ : state) benchmark::DoNotOptimize(check_rotation_closed(o, state.range(0)));
}

void BM_rotation_reference(benchmark::State& state) {
  const auto o = bench_oracle();
  for (auto _ : state) benchmark::DoNotOptimize(reference::check_rotation_closed(o, state.range(0)));
}

void BM_refute_parallel(benchmark::State& state) {
  const auto o = bench_oracle();
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_refute(o, state.range(0)));
}

void BM_refute_reference(benchmark::State& state) {
  const auto o = bench_oracle();
  for (auto _ : state) benchmark::DoNotOptimize(reference::refute_all(o, state.range(0)));
}

}  // namespace

// The rotation checks stop at the first failure, so they time the scan up to
// the same shortest failing walk.
BENCHMARK(BM_three_walk_parallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_three_walk_reference)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rotation_parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rotation_reference)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_refute_parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_refute_reference)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
