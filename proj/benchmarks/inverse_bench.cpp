#include <benchmark/benchmark.h>

#include "pcore/gen_inverse.hpp"
#include "pcore/instance_gen.hpp"

namespace {

using namespace pcore;

const TolerancePolicy kTol;

ComplexMatrix sample(benchmark::State& state) {
    const auto n = static_cast<Index>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    return gen_with_index(n, k, k == 0 ? n : n - k, 17);
}

void BM_Index(benchmark::State& state) {
    const ComplexMatrix a = sample(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(index(a, kTol));
    }
}

void BM_MoorePenrose(benchmark::State& state) {
    const ComplexMatrix a = sample(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(moore_penrose(a, kTol));
    }
}

void BM_Drazin(benchmark::State& state) {
    const ComplexMatrix a = sample(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(drazin(a, kTol));
    }
}

void BM_PseudoCore(benchmark::State& state) {
    const ComplexMatrix a = sample(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pseudo_core(a, kTol));
    }
}

void Sizes(benchmark::internal::Benchmark* b) {
    for (const int n : {4, 8, 12, 16}) {
        for (const int k : {0, 1, 3}) {
            b->Args({n, k});
        }
    }
}

} // namespace

BENCHMARK(BM_Index)->Apply(Sizes);
BENCHMARK(BM_MoorePenrose)->Apply(Sizes);
BENCHMARK(BM_Drazin)->Apply(Sizes);
BENCHMARK(BM_PseudoCore)->Apply(Sizes);
