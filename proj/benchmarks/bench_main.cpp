#include <benchmark/benchmark.h>

#include "motive/incidence.hpp"
#include "motive/level_arithmetic.hpp"
#include "motive/surface_calculus.hpp"
#include "motive/symmetry_algebra.hpp"
#include "motive/threefold_calculus.hpp"

using namespace motive;

static void BM_EpsilonSquare(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  QG eps = epsilon_projector(N);
  for (auto _ : state) benchmark::DoNotOptimize(eps * eps);
}
BENCHMARK(BM_EpsilonSquare)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_SurfaceProjectorProduct(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  SurfCorr pi1 = build_pi_bars(N).pi[1];
  SurfCorr res = residual_projector(N);
  for (auto _ : state) benchmark::DoNotOptimize(compose(res, pi1));
}
BENCHMARK(BM_SurfaceProjectorProduct)->Arg(3)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_FactoredThreefoldProduct(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  auto [alt, sym] = split_sym_alt(N);
  for (auto _ : state) benchmark::DoNotOptimize(expand(factored_compose(alt, alt)));
}
BENCHMARK(BM_FactoredThreefoldProduct)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SurfaceCertificate(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(surface_certificate(N));
}
BENCHMARK(BM_SurfaceCertificate)->Arg(3)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ThreefoldCertificate(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(threefold_certificate(N));
}
BENCHMARK(BM_ThreefoldCertificate)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_NeronLattice(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(neron_lattice(N));
}
BENCHMARK(BM_NeronLattice)->Arg(4)->Arg(8)->Arg(12);

static void BM_VerticalLatticeRank(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  IncidenceComplex x = cusp_incidence(N);
  for (auto _ : state) benchmark::DoNotOptimize(vertical_lattice_rank(x));
}
BENCHMARK(BM_VerticalLatticeRank)->Arg(3)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
