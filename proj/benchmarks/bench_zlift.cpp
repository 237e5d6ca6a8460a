#include <benchmark/benchmark.h>

#include "zlift/lift_finite.hpp"
#include "zlift/lift_stream.hpp"
#include "zlift/verify.hpp"

using namespace zlift;

static void BM_GetBasisFinite(benchmark::State& state) {
    Modulus mod(3, 2);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    IntMatrix a = random_basis_mod_q(n, mod, 42, 4 * n);
    for (auto _ : state) {
        LiftResult result = get_basis_finite(a, mod);
        benchmark::DoNotOptimize(result.lifted);
    }
}
BENCHMARK(BM_GetBasisFinite)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_StreamLift(benchmark::State& state) {
    Modulus mod(2, 3);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    IntMatrix a = random_basis_mod_q(n, mod, 7, 4 * n);
    for (auto _ : state) {
        EliminationState st(matrix_row_stream(a), mod);
        StreamLiftReport report = run_until(st, n, 4 * n);
        benchmark::DoNotOptimize(report.lifted);
    }
}
BENCHMARK(BM_StreamLift)->Arg(4)->Arg(8)->Arg(16);

static void BM_DetExact(benchmark::State& state) {
    Modulus mod(5, 2);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    IntMatrix a = random_basis_mod_q(n, mod, 3, 6 * n);
    for (auto _ : state) {
        Integer d = det_exact(a);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_DetExact)->Arg(8)->Arg(16)->Arg(32);

static void BM_HermiteNormalForm(benchmark::State& state) {
    Modulus mod(5, 2);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    IntMatrix a = random_basis_mod_q(n, mod, 11, 6 * n);
    for (auto _ : state) {
        HermiteForm hf = hermite_normal_form(a);
        benchmark::DoNotOptimize(hf.h);
    }
}
BENCHMARK(BM_HermiteNormalForm)->Arg(8)->Arg(16);

static void BM_Mgcdex(benchmark::State& state) {
    std::vector<Integer> v;
    for (long i = 0; i < state.range(0); ++i) v.push_back(Integer(1000003) * (i + 1) + 17 * i);
    for (auto _ : state) {
        GcdCombination c = mgcdex(v);
        benchmark::DoNotOptimize(c.gcd);
    }
}
BENCHMARK(BM_Mgcdex)->Arg(8)->Arg(64);

BENCHMARK_MAIN();
