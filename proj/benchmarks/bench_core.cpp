#include <benchmark/benchmark.h>

#include "nek/fixtures.hpp"
#include "nek/lp.hpp"
#include "nek/oracle.hpp"
#include "nek/states.hpp"
#include "nek/structure.hpp"

namespace {

using namespace nek;

void BM_ClassifyEven4(benchmark::State& state) {
    EventSet g = fixtures::even4();
    for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_ClassifyEven4);

// The 32-member set dominates everything: atom decompositions and the
// stepwise-join sweep are the expensive parts at this size.
void BM_ClassifyEven6(benchmark::State& state) {
    EventSet g = fixtures::even6();
    for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_ClassifyEven6);

void BM_ClassifyRandom(benchmark::State& state) {
    std::vector<EventSet> sets;
    for (std::uint64_t seed = 0; seed < 64; ++seed)
        sets.push_back(random_gse(3, 4, 6, seed));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(sets[i]));
        i = (i + 1) % sets.size();
    }
}
BENCHMARK(BM_ClassifyRandom);

void BM_SynthesizeMo2(benchmark::State& state) {
    InvolutivePoset p = fixtures::mo_poset(2);
    for (auto _ : state) benchmark::DoNotOptimize(synthesize_full_proper(p));
}
BENCHMARK(BM_SynthesizeMo2);

void BM_SimplexSeparation(benchmark::State& state) {
    StateProgram prog = build_state_program(fixtures::mo_poset(4));
    std::vector<Rat> coeffs(fixtures::mo_poset(4).size(), 0);
    coeffs[1] = 1;
    coeffs[3] = -1;
    for (auto _ : state) benchmark::DoNotOptimize(optimize_state(prog, coeffs));
}
BENCHMARK(BM_SimplexSeparation);

void BM_EnumeratePosets(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_involutive_posets(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumeratePosets)->Arg(4)->Arg(5)->Arg(6);

void BM_VertexOracle(benchmark::State& state) {
    InvolutivePoset p = fixtures::mo_poset(2);
    for (auto _ : state) benchmark::DoNotOptimize(vertex_search_full_proper(p));
}
BENCHMARK(BM_VertexOracle);

}  // namespace

BENCHMARK_MAIN();
