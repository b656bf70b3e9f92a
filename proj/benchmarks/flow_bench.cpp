#include <benchmark/benchmark.h>

#include "flownet/maxflow.hpp"
#include "flownet/methods.hpp"
#include "flownet/relation.hpp"
#include "flownet/verify.hpp"

namespace {

using namespace flownet;

Network bench_network(int n, std::int64_t max_capacity = 8) {
  GeneratorSpec spec;
  spec.cls = NetworkClassId::arbitrary;
  spec.n = n;
  spec.max_capacity = max_capacity;
  spec.seed = 20240101;
  return generate(spec);
}

void BM_MaxFlowPair(benchmark::State& state) {
  const Network n = bench_network(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_flow_value(n, 0, 1));
  }
}
BENCHMARK(BM_MaxFlowPair)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_FlowMatrix(benchmark::State& state) {
  const Network n = bench_network(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(flow_matrix(n));
  }
}
BENCHMARK(BM_FlowMatrix)->Arg(6)->Arg(12)->Arg(24);

void BM_SchulzeStrength(benchmark::State& state) {
  const Network n = bench_network(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(schulze_strength(n));
  }
}
BENCHMARK(BM_SchulzeStrength)->Arg(6)->Arg(12)->Arg(24)->Arg(48);

void BM_FlowRelation(benchmark::State& state) {
  const Network n = bench_network(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(flow_relation(n));
  }
}
BENCHMARK(BM_FlowRelation)->Arg(6)->Arg(12)->Arg(24);

void BM_CountRefinements(benchmark::State& state) {
  // Pseudo-symmetric networks are flat, so the counting path sees the
  // worst case: an empty strict part over state.range(0) vertices.
  GeneratorSpec spec;
  spec.cls = NetworkClassId::pseudo_symmetric;
  spec.n = static_cast<int>(state.range(0));
  spec.seed = 7;
  const Network n = generate(spec);
  const Relation r = flow_relation(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_linear_refinements(r));
  }
}
BENCHMARK(BM_CountRefinements)->Arg(8)->Arg(12)->Arg(16);

void BM_KMaximumSets(benchmark::State& state) {
  const Network n = bench_network(static_cast<int>(state.range(0)));
  const Relation r = flow_relation(n);
  const int k = n.size() / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(k_maximum_sets(r, k));
  }
}
BENCHMARK(BM_KMaximumSets)->Arg(8)->Arg(12)->Arg(16);

void BM_PropertySuite(benchmark::State& state) {
  SuiteConfig cfg;
  cfg.seed = 5;
  cfg.count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_suite({"quasi-transitivity"}, cfg));
  }
}
BENCHMARK(BM_PropertySuite)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
