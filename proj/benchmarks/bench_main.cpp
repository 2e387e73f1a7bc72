#include <benchmark/benchmark.h>

#include "bijective/analysis.hpp"
#include "bijective/enumeration.hpp"
#include "bijective/oracle.hpp"
#include "bijective/reorder_buffer.hpp"
#include "bijective/weighted_paging.hpp"

using namespace bijective;

namespace {

void BM_GreedyProfileCycle(benchmark::State& state) {
  const MetricSpace m = MetricSpace::build(MetricDescription::cycle(8));
  const Algorithm g(m, 2, parse_algorithm("greedy"));
  EnumerationOptions o;
  o.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cost_profile(g, {0, 4}, static_cast<int>(state.range(0)), o));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sequence_count(8, static_cast<int>(state.range(0)))));
}
BENCHMARK(BM_GreedyProfileCycle)->Args({4, 1})->Args({6, 1})->Args({6, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_OptProfilePath(benchmark::State& state) {
  const MetricSpace m = MetricSpace::build(MetricDescription::path(6));
  const Algorithm opt(m, 2, parse_algorithm("opt"));
  for (auto _ : state) benchmark::DoNotOptimize(cost_profile(opt, {1, 4}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_OptProfilePath)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_WfaProfile(benchmark::State& state) {
  const MetricSpace m = MetricSpace::build(MetricDescription::cycle(6));
  const Algorithm wfa(m, 2, parse_algorithm("wfa"));
  for (auto _ : state) benchmark::DoNotOptimize(cost_profile(wfa, {0, 3}, 4));
}
BENCHMARK(BM_WfaProfile)->Unit(benchmark::kMillisecond);

void BM_StrictRatio(benchmark::State& state) {
  const MetricSpace m = MetricSpace::build(MetricDescription::cycle(8));
  const Configuration c0{0, 4};
  const CostProfile a = cost_profile(Algorithm(m, 2, parse_algorithm("greedy")), c0, 6);
  const CostProfile b = cost_profile(Algorithm(m, 2, parse_algorithm("kcenter")), c0, 6);
  const std::vector<Rational> rhos{1, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(bijective_ratio(a, b, rhos));
}
BENCHMARK(BM_StrictRatio);

void BM_OracleSymbolic(benchmark::State& state) {
  const MetricSpace m = MetricSpace::build(MetricDescription::cycle(4));
  const KServerGame game(m, {0, 1}, static_cast<int>(state.range(0)));
  OracleOptions o;
  o.mode = OracleMode::symbolic;
  for (auto _ : state) benchmark::DoNotOptimize(run_oracle(game, o));
}
BENCHMARK(BM_OracleSymbolic)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_OracleExplicitPaging(benchmark::State& state) {
  PagingInstance inst;
  inst.costs = {1, 1, 4};
  inst.k = 2;
  const PagingGame game(inst, 3);
  OracleOptions o;
  o.mode = OracleMode::explicit_enumeration;
  for (auto _ : state) benchmark::DoNotOptimize(run_oracle(game, o));
}
BENCHMARK(BM_OracleExplicitPaging)->Unit(benchmark::kMillisecond);

void BM_RbmOpt(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rbm_opt_profile(3, 3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RbmOpt)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_AnchoredProfileStar(benchmark::State& state) {
  const MetricSpace m = MetricSpace::build(
      MetricDescription::spider({{21, 1}, {3, 1}, {3, 1}, {3, 1}, {3, 1}, {3, 1}, {3, 1}, {3, 1}}));
  for (auto _ : state) benchmark::DoNotOptimize(anchored_profile(m, {0, 4}, {0, 4}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AnchoredProfileStar)->Arg(4)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
