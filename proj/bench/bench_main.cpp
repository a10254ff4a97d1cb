// Serial reference versus the OpenMP kernels on the shipped tables.
// Run with OMP_NUM_THREADS set; Arg(0) is serial, Arg(1) parallel.
#include <benchmark/benchmark.h>

#include "filiform/algebra_file.hpp"
#include "filiform/deformation.hpp"
#include "filiform/invariants.hpp"

namespace {

using namespace filiform;

Exec ExecOf(const benchmark::State& state) { return state.range(0) == 0 ? Exec::kSerial : Exec::kParallel; }

ElaboratedAlgebra Load(const std::string& name) {
  return elaborate(load_algebra(corpus_path(FILIFORM_DATA_DIR, name)), ErrataMode::kVerbatim);
}

void BM_VerifyTable(benchmark::State& state) {
  const auto a = Load("mu17");
  const DegenerationTable table{"mu17", *a.spec, *a.forward_g, *a.printed_g};
  for (auto _ : state) benchmark::DoNotOptimize(verify_table(table, ExecOf(state)));
}
BENCHMARK(BM_VerifyTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DerivationAlgebra(benchmark::State& state) {
  const auto a = Load("mu06");
  const RationalAlgebra alg = RationalAlgebra::Specialize(a.mu, Rational(1), Rational(-1));
  for (auto _ : state) benchmark::DoNotOptimize(derivation_algebra(alg, ExecOf(state)));
}
BENCHMARK(BM_DerivationAlgebra)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// Series and center on the deformed family over a small (t, alpha) grid.
void BM_InvariantGrid(benchmark::State& state) {
  const auto a = Load("mu09");
  const StructureConstants mu_t = deform(a.mu, go_cocycle(*a.spec));
  const Exec exec = ExecOf(state);
  for (auto _ : state) {
    for (int t = 1; t <= 3; ++t) {
      for (int alpha = -2; alpha <= 2; ++alpha) {
        const RationalAlgebra alg = RationalAlgebra::Specialize(mu_t, Rational(t), Rational(alpha));
        benchmark::DoNotOptimize(lower_central_series(alg, exec));
        benchmark::DoNotOptimize(derived_series(alg, exec));
        benchmark::DoNotOptimize(center_dim(alg, exec));
      }
    }
  }
}
BENCHMARK(BM_InvariantGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
