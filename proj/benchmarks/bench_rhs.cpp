#include <benchmark/benchmark.h>

#include <cmath>

#include "wbeuler/experiment.hpp"
#include "wbeuler/solver.hpp"

using namespace wbeuler;

namespace {

void bm_rhs_1d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Experiment e = default_experiment(Scenario::convergence_1d);
  e.config.order = 5;
  const CaseSetup s = setup_case(e, n);
  const Scheme scheme(s.grid, s.config, s.pair, s.exact);
  Field u = scheme.project(s.initial);
  scheme.apply_boundary(u, 0.0);
  for (auto _ : state) {
    Field r = scheme.rhs(u, 0.0);
    benchmark::DoNotOptimize(r.raw().data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}

void bm_rhs_2d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Experiment e = default_experiment(Scenario::accuracy_2d);
  const CaseSetup s = setup_case(e, n);
  const Scheme scheme(s.grid, s.config, s.pair, s.exact);
  Field u = scheme.project(s.initial);
  scheme.apply_boundary(u, 0.0);
  for (auto _ : state) {
    Field r = scheme.rhs(u, 0.0);
    benchmark::DoNotOptimize(r.raw().data());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

void bm_reconstruct_cweno5(benchmark::State& state) {
  const Grid g = Grid::line(0.0, 1.0, 1024, 2);
  Field avg(g, 1);
  for (int i = -2; i < 1026; ++i) avg(0, i) = std::sin(6.0 * g.center(0, i));
  const ReconstructionOperator op(ReconstructionKind::cweno5);
  for (auto _ : state) {
    PolynomialField p = op.reconstruct(avg, 0, CellRange::interior(g));
    benchmark::DoNotOptimize(&p);
  }
  state.SetItemsProcessed(state.iterations() * 1024);
}

}  // namespace

BENCHMARK(bm_rhs_1d)->Arg(160)->Arg(640)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_rhs_2d)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_reconstruct_cweno5)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
