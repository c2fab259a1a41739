#include <benchmark/benchmark.h>

#include "lieprop/arith/charpoly.hpp"
#include "lieprop/families/families.hpp"
#include "lieprop/io/algebra_file.hpp"
#include "lieprop/lie/structure.hpp"
#include "lieprop/quat/quaternion.hpp"
#include "lieprop/spectral/spectral.hpp"

using namespace lieprop;

namespace {

LieAlgebra sl2_power(int copies) {
  const LieAlgebra sl2 = prototypes().sl2;
  LieAlgebra out = sl2;
  for (int k = 1; k < copies; ++k) out = direct_sum(out, sl2);
  return out;
}

}  // namespace

static void BM_SymbolicRank(benchmark::State& state) {
  const LieAlgebra L = state.range(0) == 3 ? prototypes().sl2 : sl2_power(2);
  for (auto _ : state) benchmark::DoNotOptimize(rank(L).rank);
}
BENCHMARK(BM_SymbolicRank)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_QuadraticRestrictionRank(benchmark::State& state) {
  const LieAlgebra L = quadratic_restriction(pure_lie_algebra(-1, -1), 2);
  for (auto _ : state) benchmark::DoNotOptimize(rank(L).rank);
}
BENCHMARK(BM_QuadraticRestrictionRank)->Unit(benchmark::kMillisecond);

static void BM_Charpoly(benchmark::State& state) {
  const LieAlgebra L = sl2_power(static_cast<int>(state.range(0)));
  Vec x = zero_vec(L.dim(), L.field());
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = Scalar(static_cast<long>(k % 3) - 1, L.field());
  const Mat ad = L.ad(x);
  for (auto _ : state) benchmark::DoNotOptimize(charpoly(ad));
}
BENCHMARK(BM_Charpoly)->Arg(1)->Arg(2)->Arg(4);

static void BM_AnisotropyStatus(benchmark::State& state) {
  const LieAlgebra split = prototypes().sl2;
  const LieAlgebra division = pure_lie_algebra(-1, -1);
  const LieAlgebra& L = state.range(0) ? division : split;
  for (auto _ : state) benchmark::DoNotOptimize(anisotropy_status(L).verdict);
}
BENCHMARK(BM_AnisotropyStatus)->Arg(0)->Arg(1);

static void BM_RegularitySearchBudget(benchmark::State& state) {
  const LieAlgebra L = quadratic_restriction(pure_lie_algebra(-1, -1), 2);
  const SearchBudget budget{10, static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(regularity_status(L, budget).verdict);
}
BENCHMARK(BM_RegularitySearchBudget)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_HilbertDivision(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(is_division(mpq_class(-2310), mpq_class(-30030)).division);
}
BENCHMARK(BM_HilbertDivision);

static void BM_ParseEmit(benchmark::State& state) {
  const std::string bytes = io::emit_algebra(sl2_power(3));
  for (auto _ : state) benchmark::DoNotOptimize(io::emit_algebra(io::parse_algebra(bytes)));
}
BENCHMARK(BM_ParseEmit);
