#include <benchmark/benchmark.h>

#include "astower/gf2m.hpp"
#include "astower/laurent.hpp"
#include "astower/points.hpp"
#include "astower/rami.hpp"

namespace {

void BM_field_mul(benchmark::State& state) {
    auto f8 = astower::gf2m::field_new(3);
    auto a = astower::gf2m::element(f8, 2);
    auto b = astower::gf2m::element(f8, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(astower::gf2m::mul(a, b));
    }
}
BENCHMARK(BM_field_mul);

void BM_affine_count(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(astower::points::affine_count(level, 3));
    }
}
BENCHMARK(BM_affine_count)->Arg(5)->Arg(10)->Arg(15);

void BM_chain_expand(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    const auto seq = astower::rami::zero_sequences(level).front();
    for (auto _ : state) {
        benchmark::DoNotOptimize(astower::laurent::chain_expand(seq, 128));
    }
}
BENCHMARK(BM_chain_expand)->Arg(4)->Arg(8);

// full symbolic classification of every step on every zero sequence of the level
void BM_classifier_sweep(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    const auto seqs = astower::rami::zero_sequences(level);
    for (auto _ : state) {
        long long acc = 0;
        for (const auto& seq : seqs)
            for (int t = 0; t <= level; ++t)
                acc += astower::laurent::classify_step_symbolic(seq, t).ord;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_classifier_sweep)->Arg(4)->Arg(8);

void BM_genus_closed(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(astower::rami::genus(level, astower::rami::GenusMethod::Closed));
    }
}
BENCHMARK(BM_genus_closed)->Arg(50);

} // namespace

BENCHMARK_MAIN();
