#include <benchmark/benchmark.h>

#include "lieprop/families/families.hpp"
#include "lieprop/oracle/oracle.hpp"

using namespace lieprop;

static void BM_DepthBruteforce(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const LieAlgebra L =
      reduce_mod_p(case_i_ii(Mat::from_ints({{1, 0}, {0, -1}}, FieldSpec::rationals())).algebra, p);
  for (auto _ : state) benchmark::DoNotOptimize(depth_bruteforce(L));
}
BENCHMARK(BM_DepthBruteforce)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_CaseVDepthOverF3(benchmark::State& state) {
  const FieldSpec Q = FieldSpec::rationals();
  const LieAlgebra L = reduce_mod_p(case_v({companion(UPoly::from_ints({-2, 0, -1, 0, 1}, Q))}).algebra, 3);
  for (auto _ : state) benchmark::DoNotOptimize(depth_bruteforce(L));
}
BENCHMARK(BM_CaseVDepthOverF3)->Unit(benchmark::kMillisecond);

static void BM_ChainBound(benchmark::State& state) {
  const FieldSpec f = FieldSpec::prime(5);
  const Mat a = Mat::from_ints({{1, 2, 0, 3}, {0, 1, 4, 0}, {2, 0, 0, 1}, {1, 1, 1, 0}}, f);
  const bool brute = state.range(0) != 0;
  for (auto _ : state) {
    if (brute) {
      benchmark::DoNotOptimize(invariant_chain_bruteforce(a));
    } else {
      benchmark::DoNotOptimize(invariant_chain_bound(a).value);
    }
  }
}
BENCHMARK(BM_ChainBound)->Arg(0)->Arg(1);
BENCHMARK_MAIN();
