#include <benchmark/benchmark.h>
#include "eptl/determinant.hpp"
#include "eptl/intertwiner.hpp"
#include "eptl/linkrep.hpp"
#include "eptl/transfer.hpp"

using namespace eptl;

static void BM_PolyMultiply(benchmark::State& state) {
    LaurentPoly a = (trig::beta() + trig::alpha(8)).pow(static_cast<unsigned>(state.range(0)));
    LaurentPoly b = a.invert_v();
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply)->Arg(4)->Arg(8)->Arg(16);

static void BM_GramMatrix(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gram_matrix_tilde(N, N % 2));
}
BENCHMARK(BM_GramMatrix)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_Intertwiner(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(i_matrix(N, N % 2));
}
BENCHMARK(BM_Intertwiner)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_DetModular(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    RingMatrix G = gram_matrix_tilde(N, 0);
    for (auto _ : state) benchmark::DoNotOptimize(det_modular(G));
}
BENCHMARK(BM_DetModular)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_DetBareiss(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    RingMatrix G = gram_matrix_tilde(N, 0);
    for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(G));
}
BENCHMARK(BM_DetBareiss)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_TransferMatrix(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    TransferPoint p{0.9, 0.3, 0.2};
    for (auto _ : state) benchmark::DoNotOptimize(transfer_matrix(N, N % 2, p));
}
BENCHMARK(BM_TransferMatrix)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_NumericDeterminant(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    RingMatrix G = gram_matrix_tilde(N, 0);
    for (auto _ : state) benchmark::DoNotOptimize(det_numeric_log_extended(G, 1.1, 0.4));
}
BENCHMARK(BM_NumericDeterminant)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
