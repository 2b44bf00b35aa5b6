#include <benchmark/benchmark.h>

#include <random>

#include "tropmle/critical_points.hpp"
#include "tropmle/linalg.hpp"
#include "tropmle/model.hpp"
#include "tropmle/subdivision.hpp"
#include "tropmle/tips.hpp"

namespace {

using namespace tropmle;

IntMatrix random_square(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long> entry(-9, 9);
    IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    return m;
}

IntMatrix random_model(std::mt19937_64& rng, int k, int n) {
    std::uniform_int_distribution<long> entry(0, 6);
    for (;;) {
        IntMatrix a(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) a.at(0, static_cast<std::size_t>(j)) = 1;
        for (int i = 1; i < k; ++i)
            for (int j = 0; j < n; ++j)
                a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = entry(rng);
        if (rank(a) == static_cast<std::size_t>(k)) return a;
    }
}

const IntMatrix kHirzebruch{{1, 1, 1, 1, 1, 1}, {0, 1, 0, 1, 2, 3}, {0, 0, 1, 1, 1, 1}};
const IntMatrix kPentagon{{1, 1, 1, 1, 1}, {0, 1, 2, 1, 0}, {0, 0, 1, 2, 1}};
const IntMatrix kPrism{
    {1, 1, 1, 1, 1, 1}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}, {0, 0, 0, 1, 1, 1}};

RatVector rats(std::initializer_list<long> v) {
    RatVector out;
    for (long x : v) out.emplace_back(x);
    return out;
}

void BM_det(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const IntMatrix m = random_square(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_det)->Arg(4)->Arg(8)->Arg(12);

void BM_matroid_enumeration(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const IntMatrix a = random_model(rng, 3, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(matroid_from_matrix(a));
}
BENCHMARK(BM_matroid_enumeration)->Arg(8)->Arg(10)->Arg(12);

void BM_model_construction(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ModelMatrix(kHirzebruch));
}
BENCHMARK(BM_model_construction);

void BM_tau_operator(benchmark::State& state) {
    const ModelMatrix model(kHirzebruch);
    const TropVector w = rats({6, 8, 7, 6, 4, 0});
    const Subset tau = subset_of({1, 4, 5});
    for (auto _ : state) benchmark::DoNotOptimize(tau_operator(model, tau, w));
}
BENCHMARK(BM_tau_operator);

void BM_maximal_cells(benchmark::State& state) {
    const ModelMatrix model(kHirzebruch);
    const RatVector omega = rats({-6, -6, -4, -4, -4, 0});
    for (auto _ : state) benchmark::DoNotOptimize(maximal_cells(model, omega));
}
BENCHMARK(BM_maximal_cells);

void BM_regular_triangulation(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const ModelMatrix model(random_model(rng, 3, static_cast<int>(state.range(0))));
    const RatVector omega(static_cast<std::size_t>(model.n()), Rat(0));
    for (auto _ : state) benchmark::DoNotOptimize(regular_triangulation(model, omega));
}
BENCHMARK(BM_regular_triangulation)->Arg(6)->Arg(8)->Arg(10);

void BM_solve_pentagon(benchmark::State& state) {
    const ModelMatrix model(kPentagon);
    const TropicalDataVector w(rats({0, 4, 10, 6, 5}));
    for (auto _ : state) benchmark::DoNotOptimize(solve(model, w));
}
BENCHMARK(BM_solve_pentagon);

void BM_solve_prism(benchmark::State& state) {
    const ModelMatrix model(kPrism);
    const TropicalDataVector w(rats({0, 1, 1, 1, 2, 4}));
    for (auto _ : state) benchmark::DoNotOptimize(solve(model, w));
}
BENCHMARK(BM_solve_prism);

void BM_tips_run(benchmark::State& state) {
    const ModelMatrix model(IntMatrix{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
    const ScalingModel s =
        make_scaling_model(model, IntMatrix{{2, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}});
    const TropicalDataVector w(rats({0, 2, 1, 4}));
    for (auto _ : state)
        benchmark::DoNotOptimize(tips_run(model, s, w, TropVector(4, Rat(0))));
}
BENCHMARK(BM_tips_run);

} // namespace

BENCHMARK_MAIN();
