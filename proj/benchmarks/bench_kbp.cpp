#include <benchmark/benchmark.h>

#include "kbp/reduction.hpp"
#include "kbp/schur.hpp"
#include "kbp/shifted_schur.hpp"
#include "kbp/solver.hpp"
#include "kbp/young.hpp"

namespace {

using namespace kbp;

void BM_ReducedSolve(benchmark::State &state) {
    int d = static_cast<int>(state.range(0));
    int N = static_cast<int>(state.range(1));
    WitnessSpec x = isotropic_witness(d, -0.8);
    SolverConfig cfg;
    cfg.workers = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_hierarchy(x, 2, N, cfg).hierarchy_value);
    }
}
BENCHMARK(BM_ReducedSolve)->Args({3, 2})->Args({3, 3})->Args({4, 3})->Unit(benchmark::kMillisecond);

void BM_UnreducedOracle(benchmark::State &state) {
    int d = static_cast<int>(state.range(0));
    int N = static_cast<int>(state.range(1));
    WitnessSpec x = isotropic_witness(d, -0.8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(unreduced_oracle(x, 2, N).clipped);
    }
}
BENCHMARK(BM_UnreducedOracle)->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_ReducedSolveSdp(benchmark::State &state) {
    WitnessSpec x = isotropic_witness(3, -0.8);
    SolverConfig cfg;
    cfg.method = SolveMethod::Sdp;
    cfg.workers = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_hierarchy(x, 2, 2, cfg).hierarchy_value);
    }
}
BENCHMARK(BM_ReducedSolveSdp)->Unit(benchmark::kMillisecond);

void BM_SchurTwirl(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    schur_transform(2, n);
    Index dim = Index(1) << n;
    HermitianOp rho(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
    for (auto _ : state) {
        benchmark::DoNotOptimize(twirl(rho, 2, n, 1).trace());
    }
}
BENCHMARK(BM_SchurTwirl)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_SkewSytDim(benchmark::State &state) {
    Partition outer({8, 6, 5, 3, 2});
    Partition inner({2, 1, 1, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(skew_syt_dim({outer, inner}));
    }
}
BENCHMARK(BM_SkewSytDim);

void BM_RatioAOverS(benchmark::State &state) {
    Partition lambda({12, 9, 7});
    for (auto _ : state) {
        benchmark::DoNotOptimize(ratio_a_over_s(lambda, 3));
    }
}
BENCHMARK(BM_RatioAOverS);

}  // namespace

BENCHMARK_MAIN();
