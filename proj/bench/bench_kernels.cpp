#include <benchmark/benchmark.h>

#include "opensov/verify.hpp"

using namespace osov;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(1) ? Exec::openmp : Exec::serial; }

std::vector<cd> points(int n) {
    std::vector<cd> out;
    for (int i = 0; i < n; ++i) out.emplace_back(0.1 + 0.03 * i, 0.2 - 0.02 * i);
    return out;
}

void BM_TransferBatch(benchmark::State& st) {
    const int n = int(st.range(0));
    const ModelParams p = seeded_model(n, 1);
    const BoundaryParams b = seeded_boundary(1);
    const auto pts = points(16);
    for (auto _ : st) benchmark::DoNotOptimize(transfer_batch(p, b, pts, exec_of(st)));
}

void BM_NewtonMultiSeed(benchmark::State& st) {
    const int n = int(st.range(0));
    const QuadraticSystem sys = assemble_quadratic_system(build_ansatz(seeded_model(n, 1), seeded_boundary(1)));
    const auto seeds = random_seeds(sys, 20 << n, 3);
    for (auto _ : st) benchmark::DoNotOptimize(newton_multi_seed(sys, seeds, {}, exec_of(st)));
}

void BM_Homotopy(benchmark::State& st) {
    const int n = int(st.range(0));
    const QuadraticSystem sys = assemble_quadratic_system(build_ansatz(seeded_model(n, 1), seeded_boundary(1)));
    for (auto _ : st) benchmark::DoNotOptimize(homotopy_all_paths(sys, 1, {}, exec_of(st)));
}

void BM_PairScalarCheck(benchmark::State& st) {
    const int n = int(st.range(0));
    const ModelParams p = seeded_model(n, 1);
    const BoundaryParams b = seeded_boundary(1);
    const cd alpha = seeded_alpha(1);
    const Gauge g(p, b, alpha);
    const cd beta = triangular_gauge(p, b, alpha).beta;
    const cd z = sov_normalization(g, beta - 2.0);
    for (auto _ : st) benchmark::DoNotOptimize(random_pair_scalar_check(g, beta, z, 100, 1, exec_of(st)));
}

void BM_AMinusAction(benchmark::State& st) {
    const int n = int(st.range(0));
    const ModelParams p = seeded_model(n, 1);
    const BoundaryParams b = seeded_boundary(1);
    const cd alpha = seeded_alpha(1);
    const Gauge g(p, b, alpha);
    const cd beta = triangular_gauge(p, b, alpha).beta;
    const SovBasis left = left_sov_basis(g, beta - 2.0);
    const auto pts = points(4);
    for (auto _ : st) benchmark::DoNotOptimize(a_minus_action_batch(g, left, pts, exec_of(st)));
}

}  // namespace

// second argument: 0 serial reference, 1 OpenMP
BENCHMARK(BM_TransferBatch)->ArgsProduct({{3, 5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NewtonMultiSeed)->ArgsProduct({{3, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Homotopy)->ArgsProduct({{3, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairScalarCheck)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AMinusAction)->ArgsProduct({{3, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
