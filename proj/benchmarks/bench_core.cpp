#include <benchmark/benchmark.h>

#include "thue/bounds.hpp"
#include "thue/roots.hpp"
#include "thue/solver.hpp"

using namespace thue;

namespace {

BinaryForm fixture_cubic() { return parse_form("x^3-2y^3"); }
BinaryForm fixture_sextic() { return parse_form("1,3,-2,7,-1,4,-11"); }

void BM_discriminant_sextic(benchmark::State& state) {
  BinaryForm F = fixture_sextic();
  for (auto _ : state) benchmark::DoNotOptimize(discriminant(F));
}
BENCHMARK(BM_discriminant_sextic);

void BM_gl2_apply_and_disc(benchmark::State& state) {
  BinaryForm F = fixture_sextic();
  IntMatrix2 A{911, -353, 247, 1000};
  for (auto _ : state) {
    BinaryForm G = gl2_apply(F, A);
    benchmark::DoNotOptimize(discriminant(G));
  }
}
BENCHMARK(BM_gl2_apply_and_disc);

void BM_enumerate_cubic(benchmark::State& state) {
  BinaryForm F = fixture_cubic();
  Int ymax(state.range(0));
  for (auto _ : state) {
    auto r = enumerate_solutions(F, 1, ymax, SolveMode::Inequality, true);
    benchmark::DoNotOptimize(r.solutions.size());
  }
}
BENCHMARK(BM_enumerate_cubic)->Arg(25)->Arg(100);

void BM_root_solve_cubic(benchmark::State& state) {
  BinaryForm F = fixture_cubic();
  for (auto _ : state) {
    RootSystem rs = RootSystem::solve(F);
    benchmark::DoNotOptimize(rs.q());
  }
}
BENCHMARK(BM_root_solve_cubic);

void BM_mahler_cubic(benchmark::State& state) {
  BinaryForm F = fixture_cubic();
  for (auto _ : state) {
    MahlerMeasure M = mahler_measure(F);
    benchmark::DoNotOptimize(M.value.mid_double());
  }
}
BENCHMARK(BM_mahler_cubic);

}  // namespace

BENCHMARK_MAIN();
