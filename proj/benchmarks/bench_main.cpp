#include <benchmark/benchmark.h>

#include "opnum/bidisk.hpp"
#include "opnum/hardy1d.hpp"
#include "opnum/rates.hpp"
#include "opnum/series.hpp"

using namespace opnum;

static void BM_TaylorLens(benchmark::State& state) {
  SymbolSpec s = SymbolSpec::compose(SymbolSpec::lens(0.5), SymbolSpec::halfshift());
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(taylor(s, D));
}
BENCHMARK(BM_TaylorLens)->Arg(64)->Arg(256)->Arg(1024);

static void BM_BuildHardy(benchmark::State& state) {
  SymbolSpec s = SymbolSpec::affine(0.5, cplx(0.2, 0.1));
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_matrix(Weight::unit(), s, N));
}
BENCHMARK(BM_BuildHardy)->Arg(64)->Arg(256);

static void BM_SingularValuesRational(benchmark::State& state) {
  SymbolSpec s = SymbolSpec::compose(SymbolSpec::lens(0.5), SymbolSpec::halfshift());
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    OperatorMatrix M = build_matrix(Weight::unit(), s, N, Basis::Rational);
    benchmark::DoNotOptimize(singular_values(M, static_cast<std::size_t>(N / 2)));
  }
}
BENCHMARK(BM_SingularValuesRational)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_TensorMerge(benchmark::State& state) {
  SingularSpectrum a, b;
  for (int i = 0; i < 512; ++i) {
    a.values.push_back(std::pow(0.97, i));
    b.values.push_back(std::pow(0.93, i));
  }
  a.stabilized.assign(512, true);
  b.stabilized.assign(512, true);
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tensor_spectrum(a, b, count));
}
BENCHMARK(BM_TensorMerge)->Arg(1000)->Arg(20000);

static void BM_RearrangementOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rearrangement_oracle({0.7, 1.1, 1.9}, 10000));
}
BENCHMARK(BM_RearrangementOracle);

static void BM_TriangularChobou(benchmark::State& state) {
  Symbol2D c = chobou_symbol(0.5);
  TriangularOptions opt;
  opt.floor = 1e-4;
  for (auto _ : state) benchmark::DoNotOptimize(triangular_model(c.phi(), c.psi(), 128, 100, opt));
}
BENCHMARK(BM_TriangularChobou)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_MAIN();
