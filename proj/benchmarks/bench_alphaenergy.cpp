#include "alphaenergy/bounds.hpp"
#include "alphaenergy/codec.hpp"
#include "alphaenergy/generators.hpp"
#include "alphaenergy/harness.hpp"
#include "alphaenergy/random.hpp"

#include <benchmark/benchmark.h>

namespace ae = alphaenergy;

static ae::SymmetricMatrix random_matrix(std::size_t n) {
    ae::Rng rng(n);
    ae::SymmetricMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            m.set(i, j, 2.0 * rng.unit() - 1.0);
        }
    }
    return m;
}

static void BM_Eigendecompose(benchmark::State& state) {
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ae::eigendecompose(m));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Eigendecompose)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNCubed);

static void BM_AlphaSpectrum(benchmark::State& state) {
    const auto g = ae::generate(ae::family::ErdosRenyi{static_cast<std::size_t>(state.range(0)), 0.3, 1, true});
    for (auto _ : state) {
        benchmark::DoNotOptimize(ae::alpha_spectrum(g, 0.4));
    }
}
BENCHMARK(BM_AlphaSpectrum)->Arg(10)->Arg(30)->Arg(62);

static void BM_EvaluateAll(benchmark::State& state) {
    const auto g = ae::generate(ae::family::ErdosRenyi{static_cast<std::size_t>(state.range(0)), 0.4, 2, true});
    for (auto _ : state) {
        benchmark::DoNotOptimize(ae::evaluate_all(g, 0.6));
    }
}
BENCHMARK(BM_EvaluateAll)->Arg(10)->Arg(30)->Arg(62);

static void BM_Graph6RoundTrip(benchmark::State& state) {
    const auto g = ae::generate(ae::family::ErdosRenyi{62, 0.5, 3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(ae::parse_graph6(ae::serialize_graph6(g)));
    }
}
BENCHMARK(BM_Graph6RoundTrip);

static void BM_RandomRegular(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ae::generate(ae::family::RandomRegular{static_cast<std::size_t>(state.range(0)), 3, seed++}));
    }
}
BENCHMARK(BM_RandomRegular)->Arg(20)->Arg(60);

static void BM_Fuzz(benchmark::State& state) {
    ae::FuzzOptions options;
    options.trials = 20;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ae::run_fuzz(options));
    }
}
BENCHMARK(BM_Fuzz)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
