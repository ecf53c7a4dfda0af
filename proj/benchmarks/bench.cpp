#include <benchmark/benchmark.h>

#include "dtev/harness.hpp"
#include "dtev/weyl_inverse.hpp"

using namespace dtev;

static void BM_PolyRoots(benchmark::State& state) {
    Rng rng(1);
    Spectrum s;
    for (int i = 0; i < state.range(0); ++i) s.values.push_back(random_in_disc(rng, 2.0));
    const Poly p = poly_from_roots(s, Complex(1.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(poly_roots(p));
    }
}
BENCHMARK(BM_PolyRoots)->DenseRange(3, 23, 4);

static void BM_WeylRoundTrip(benchmark::State& state) {
    Rng rng(1);
    const StandardCoeffs S = random_standard(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_weyl(weyl_forward(S).M));
    }
}
BENCHMARK(BM_WeylRoundTrip)->DenseRange(2, 10, 2);

static void BM_SolveTransmission(benchmark::State& state) {
    Rng rng(1);
    const int l = static_cast<int>(state.range(0));
    const TransmissionInstance T = random_transmission(rng, l);
    const Spectrum sp = poly_roots(char_poly_transmission(T));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_transmission(
            T.alpha_dot, T.beta_dot, T.alpha[static_cast<std::size_t>(l - 1)], sp));
    }
}
BENCHMARK(BM_SolveTransmission)->DenseRange(2, 8, 2);

BENCHMARK_MAIN();
