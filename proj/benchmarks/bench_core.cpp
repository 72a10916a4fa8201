#include <benchmark/benchmark.h>

#include <random>

#include "braidinv/braid.hpp"
#include "braidinv/chords.hpp"
#include "braidinv/quantum.hpp"
#include "braidinv/weights.hpp"

namespace {

braidinv::BraidWord random_word(std::mt19937& rng, int n, int len) {
    braidinv::BraidWord b(n);
    for (int t = 0; t < len; ++t)
        b.letters.push_back({1 + static_cast<int>(rng() % (n - 1)), rng() % 2 ? +1 : -1});
    return b;
}

void BM_HandleReduction(benchmark::State& state) {
    std::mt19937 rng(1);
    const int n = 4;
    const int len = static_cast<int>(state.range(0));
    // Conjugated inverse pair: cancellation needs genuine handle reductions.
    const auto w = random_word(rng, n, len);
    const auto c = random_word(rng, n, len / 2);
    const auto conj = braidinv::compose(braidinv::compose(c, w), braidinv::invert(c));
    for (auto _ : state) {
        benchmark::DoNotOptimize(braidinv::braids_equal(conj, w));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HandleReduction)->Range(8, 64)->Complexity();

void BM_Combing(benchmark::State& state) {
    std::mt19937 rng(2);
    braidinv::BraidWord b(4);
    while (!braidinv::is_pure(b) || b.letters.empty()) b = random_word(rng, 4, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(braidinv::comb(b));
    }
}
BENCHMARK(BM_Combing);

void BM_NormalForm(benchmark::State& state) {
    std::mt19937 rng(3);
    braidinv::DiagramCombination x(4);
    for (int k = 0; k < 4; ++k) {
        braidinv::ChordDiagram d(4);
        for (int t = 0; t < static_cast<int>(state.range(0)); ++t) {
            int a = 1 + static_cast<int>(rng() % 4), b = 1 + static_cast<int>(rng() % 4);
            while (b == a) b = 1 + static_cast<int>(rng() % 4);
            d.chords.emplace_back(a, b);
        }
        x.add_term(d, braidinv::Rational(1));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(braidinv::normal_form(x));
    }
}
BENCHMARK(BM_NormalForm)->DenseRange(2, 6);

void BM_SeparationMatrix(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(braidinv::separation_matrix(3, m));
    }
}
BENCHMARK(BM_SeparationMatrix)->DenseRange(1, 3);

void BM_QuantumInvariant(benchmark::State& state) {
    std::mt19937 rng(4);
    const auto w = random_word(rng, 3, 16);
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(braidinv::quantum_invariant(w, N, 4));
    }
}
BENCHMARK(BM_QuantumInvariant)->DenseRange(2, 3);

void BM_WeightPath(benchmark::State& state) {
    const auto d = braidinv::parse_diagram("n=3; t(1,3) t(1,3) t(2,3)");
    const auto p = braidinv::parse_path("{S1, S2, S1 S2 S3 S3}");
    for (auto _ : state) {
        benchmark::DoNotOptimize(braidinv::weight_path(d, p));
    }
}
BENCHMARK(BM_WeightPath);

}  // namespace

BENCHMARK_MAIN();
