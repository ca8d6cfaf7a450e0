#include <benchmark/benchmark.h>

#include "sr2/instances.hpp"
#include "sr2/prox.hpp"
#include "sr2/schedule.hpp"
#include "sr2/solver.hpp"

namespace {

void BM_prox_mcp_d10000(benchmark::State& state) {
  const sr2::McpParams p(2.0, 3.0);
  const sr2::Vec x = sr2::Vec::LinSpaced(10000, -8.0, 8.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sr2::prox_mcp(x, 0.5, p));
  }
}
BENCHMARK(BM_prox_mcp_d10000);

void BM_prox_l1_d10000(benchmark::State& state) {
  const sr2::Vec x = sr2::Vec::LinSpaced(10000, -8.0, 8.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sr2::prox_l1(x, 0.5, 1.0));
  }
}
BENCHMARK(BM_prox_l1_d10000);

void BM_schedule_advance(benchmark::State& state) {
  const sr2::ScheduleParams sp =
      sr2::make_schedule_params(5000.0, 1.0, -1.0 / 3.0, sr2::BetaMode::compromised);
  double A = 0.0;
  for (auto _ : state) {
    A = sr2::advance_A(A, sp);
    if (!std::isfinite(A)) A = 0.0;
    benchmark::DoNotOptimize(A);
  }
}
BENCHMARK(BM_schedule_advance);

void BM_sr2fista_step_paper6(benchmark::State& state) {
  const sr2::ProblemSpec p = sr2::build_paper6();
  const sr2::ScheduleParams sp =
      sr2::make_schedule_params(5000.0, 1.0, -1.0 / 3.0, sr2::BetaMode::compromised);
  const sr2::SolverConfig cfg;
  sr2::SolverState s = sr2::make_initial_state(sr2::Vec::Ones(p.dimension));
  for (auto _ : state) {
    s = sr2::sr2fista_step(s, p, cfg, sp);
    if (s.k == 1500) s = sr2::make_initial_state(sr2::Vec::Ones(p.dimension));
    benchmark::DoNotOptimize(s.x.data());
  }
}
BENCHMARK(BM_sr2fista_step_paper6);

void BM_ista_step_paper6(benchmark::State& state) {
  const sr2::ProblemSpec p = sr2::build_paper6();
  sr2::SolverState s = sr2::make_initial_state(sr2::Vec::Ones(p.dimension));
  for (auto _ : state) {
    s = sr2::ista_step(s, p, 1.0 / 5000.0);
    benchmark::DoNotOptimize(s.x.data());
  }
}
BENCHMARK(BM_ista_step_paper6);

}  // namespace

BENCHMARK_MAIN();
