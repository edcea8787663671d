#include <benchmark/benchmark.h>

#include "rbs/linfty.hpp"
#include "rbs/minimal_model.hpp"
#include "rbs/monomial_model.hpp"
#include "rbs/tensor.hpp"
#include "rbs/yang_baxter.hpp"

using namespace rbs;

static void BM_DSquared(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(check_d_squared(Presentation::Mrs, n).ok());
}
BENCHMARK(BM_DSquared)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_Homotopy(benchmark::State& st) {
  const int w = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(check_homotopy(3, w).checked);
}
BENCHMARK(BM_Homotopy)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Jacobi(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(check_generalized_jacobi(2, 3, 100, 1).ok());
}
BENCHMARK(BM_Jacobi)->Unit(benchmark::kMillisecond);

static void BM_McNilpotent(benchmark::State& st) {
  auto A = make_matrix_algebra(2);
  auto a = TensorElem::pure(A, {SparseVector{{A->index(0, 1), 1}}, SparseVector{{A->index(0, 1), 1}}});
  auto [R, S] = ybp_to_rbs(YBPair{a, a});
  LinftyContext ctx(A->space());
  auto alpha = encode_rbs(ctx, A->multiplication_map(), R, S);
  for (auto _ : st) benchmark::DoNotOptimize(is_mc(ctx, alpha));
}
BENCHMARK(BM_McNilpotent)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
