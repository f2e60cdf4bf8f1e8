#include <benchmark/benchmark.h>

#include "shl/catalog.hpp"
#include "shl/curvature.hpp"
#include "shl/linalg.hpp"
#include "shl/prolongations.hpp"

namespace {

shl::RepPtr rep(const char* spec) { return shl::share(shl::make(shl::AlgebraSpec::parse(spec), 64)); }

void BM_BianchiSo(benchmark::State& state) {
  const auto r = rep(("so:0," + std::to_string(state.range(0))).c_str());
  shl::BianchiOptions o;
  o.parallel = false;
  for (auto _ : state) benchmark::DoNotOptimize(shl::bianchi_kernel(r, o).even.dim());
}
BENCHMARK(BM_BianchiSo)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_BianchiOsp(benchmark::State& state) {
  const auto r = rep("osp:2,0,2");
  shl::BianchiOptions o;
  o.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(shl::bianchi_kernel(r, o).odd.dim());
}
BENCHMARK(BM_BianchiOsp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SkewProlongationGl(benchmark::State& state) {
  const auto r = rep(("gl_real:" + std::to_string(state.range(0))).c_str());
  for (auto _ : state) benchmark::DoNotOptimize(shl::first_prolongation(r, false).dim());
}
BENCHMARK(BM_SkewProlongationGl)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Rref(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  shl::Mat m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      m(i, j) = shl::Rat(static_cast<long>((i * 7 + j * 3) % 11) - 5, 1 + (i + j) % 3);
      m(i, j).canonicalize();
    }
  for (auto _ : state) benchmark::DoNotOptimize(shl::rref(m).rank);
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(48);

}  // namespace

BENCHMARK_MAIN();
