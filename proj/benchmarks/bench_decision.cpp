#include <benchmark/benchmark.h>

#include "brsc/flats.hpp"
#include "brsc/homology.hpp"
#include "brsc/instances.hpp"
#include "brsc/shelling.hpp"

using namespace brsc;

namespace {

void BM_ShellabilityDecision(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    BoolMatrix m = random_simple_dim2_matrix(17, n);
    for (auto _ : state) benchmark::DoNotOptimize(is_shellable_matrix(m));
}
BENCHMARK(BM_ShellabilityDecision)->Arg(40)->Arg(60)->Arg(80)->Arg(120)->Arg(160);

void BM_Independence(benchmark::State& state) {
    BoolMatrix m = canonical_matrix(example_complex("occur", 5));
    VertexSet probe = VertexSet::of(10, {0, 2, 5});
    for (auto _ : state) benchmark::DoNotOptimize(m.is_independent(probe));
}
BENCHMARK(BM_Independence);

void BM_Flats(benchmark::State& state) {
    SimplicialComplex c = example_complex("occur", static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(all_flats(c));
}
BENCHMARK(BM_Flats)->Arg(3)->Arg(5);

void BM_Homology(benchmark::State& state) {
    SimplicialComplex c = example_complex("occur", static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(c));
}
BENCHMARK(BM_Homology)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
