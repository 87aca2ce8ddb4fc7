#include <benchmark/benchmark.h>

#include "gfix/gfix.hpp"

namespace {

using namespace gfix;

void BM_CheckAxioms(benchmark::State& state) {
  const ConvexGSpace cs = make_perimeter_space(static_cast<std::size_t>(state.range(0)));
  SamplePlan plan;
  plan.count = 1000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_axioms(cs.space, plan));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(plan.count));
}
BENCHMARK(BM_CheckAxioms)->Arg(1)->Arg(3)->Arg(8);

void BM_CheckDerived(benchmark::State& state) {
  const ConvexGSpace cs = make_max_space(2);
  SamplePlan plan;
  plan.count = 1000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_derived(cs.space, plan));
  }
}
BENCHMARK(BM_CheckDerived);

void BM_RunMann(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  const ConvexGSpace cs = make_max_space(dim);
  const Mapping t = make_affine_contraction(Point::filled(dim, 1.0), 0.5);
  StoppingRule stop;
  stop.max_iters = 1000;
  stop.residual_tol = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_mann(cs, t, Point::filled(dim, 5.0), StepSchedule::harmonic(), stop));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_RunMann)->Arg(1)->Arg(4)->Arg(16);

void BM_ProductBound(benchmark::State& state) {
  const auto mode = state.range(0) == 0 ? ProductMode::Direct : ProductMode::LogSpace;
  for (auto _ : state) {
    benchmark::DoNotOptimize(product_bound(0.5, StepSchedule::harmonic(), 100000, mode));
  }
}
BENCHMARK(BM_ProductBound)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
