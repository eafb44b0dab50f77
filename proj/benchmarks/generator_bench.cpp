#include <benchmark/benchmark.h>

#include "pcore/campaign.hpp"
#include "pcore/instance_gen.hpp"

namespace {

using namespace pcore;

void BM_GenWithIndex(benchmark::State& state) {
    const auto n = static_cast<Index>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gen_with_index(n, 2, n - 3, ++seed));
    }
}
BENCHMARK(BM_GenWithIndex)->Arg(4)->Arg(8)->Arg(16);

void BM_CommutantPair(benchmark::State& state) {
    const auto n = static_cast<Index>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gen_commutant_pair(n, ++seed));
    }
}
BENCHMARK(BM_CommutantPair)->Arg(4)->Arg(8);

// One generated instance per block theorem at blocks of size n + n.
void BM_BlockInstance(benchmark::State& state) {
    const auto id = static_cast<TheoremId>(state.range(0));
    const auto n = static_cast<Index>(state.range(1));
    state.SetLabel(std::string(to_string(id)));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_instance(id, {n, n}, ++seed));
    }
}
BENCHMARK(BM_BlockInstance)
    ->ArgsProduct({{static_cast<long>(TheoremId::T4_1), static_cast<long>(TheoremId::T4_3),
                    static_cast<long>(TheoremId::T4_5)},
                   {2, 4}});

} // namespace
