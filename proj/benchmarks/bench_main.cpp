#include <benchmark/benchmark.h>

#include "shadowlp/census.hpp"
#include "shadowlp/linalg.hpp"
#include "shadowlp/rng.hpp"
#include "shadowlp/shadow_vertex.hpp"
#include "shadowlp/two_phase.hpp"

using namespace shadowlp;

namespace {

LinearProgram random_instance(std::uint64_t seed, int n, int d) {
    RngStream stream(seed, 0);
    LinearProgram lp;
    lp.n = n;
    lp.d = d;
    for (int i = 0; i < n; ++i) {
        Vec row(d);
        for (double& v : row) v = stream.gaussian();
        lp.a.push_back(std::move(row));
        lp.y.push_back(1.0 + std::abs(stream.gaussian()));
    }
    lp.z.assign(d, 0.0);
    for (double& v : lp.z) v = stream.gaussian();
    return lp;
}

Mat random_matrix(std::uint64_t seed, int d) {
    RngStream stream(seed, 0);
    Mat m(d, d);
    for (double& v : m.data) v = stream.gaussian();
    return m;
}

void BM_smin(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    Mat m = random_matrix(1, d);
    for (auto _ : state) benchmark::DoNotOptimize(smin(m));
}
BENCHMARK(BM_smin)->Arg(3)->Arg(6)->Arg(12);

void BM_solve_square(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    Mat m = random_matrix(2, d);
    Vec b(d, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(solve_square(m, b));
}
BENCHMARK(BM_solve_square)->Arg(3)->Arg(6)->Arg(12);

void BM_polar_walk(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    LinearProgram lp = random_instance(3, n, 3);
    // start from a basis certified for a ray through it
    RngStream stream(4, 0);
    Basis start;
    Vec t;
    std::vector<int> idx = first_subset(3);
    do {
        Vec alpha = sample_alpha(stream, 3);
        Vec cand = mat_vec(basis_cols(lp, idx), alpha);
        if (is_opt_simp(lp, cand, idx)) {
            start = idx;
            t = cand;
            break;
        }
    } while (next_subset(idx, lp.n));
    if (start.empty()) {
        state.SkipWithError("no certified start basis");
        return;
    }
    for (auto _ : state) benchmark::DoNotOptimize(polar_shadow_vertex(lp, start, t));
}
BENCHMARK(BM_polar_walk)->Arg(10)->Arg(20)->Arg(40);

void BM_two_phase(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    LinearProgram lp = random_instance(5, n, 3);
    std::uint64_t trial = 0;
    for (auto _ : state) {
        RngStream stream(6, trial++);
        benchmark::DoNotOptimize(two_phase_solve(lp, stream));
    }
}
BENCHMARK(BM_two_phase)->Arg(10)->Arg(20)->Arg(40);

void BM_exact_shadow(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    LinearProgram lp = random_instance(7, n, 3);
    RngStream stream(8, 0);
    Vec t(3);
    for (double& v : t) v = stream.gaussian();
    for (auto _ : state) benchmark::DoNotOptimize(exact_shadow(lp.a, lp.y, t, lp.z));
}
BENCHMARK(BM_exact_shadow)->Arg(10)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
