// Microbenchmarks for the hot paths: orbit computation, piece bounds, cycle
// enumeration, Dehn reduction, ball construction, geodesics and the diagram
// generator. Run with --benchmark_filter=... to narrow down.

#include <benchmark/benchmark.h>

#include "grsc/ball.hpp"
#include "grsc/cancellation.hpp"
#include "grsc/cycles.hpp"
#include "grsc/dehn.hpp"
#include "grsc/diagram_gen.hpp"
#include "grsc/graph.hpp"
#include "grsc/orbits.hpp"
#include "grsc/pieces.hpp"

using namespace grsc;

namespace {

const LabelledGraph& two_cycle_graph() {
    static LabelledGraph g = load_graph_file(FIXTURE_DIR "/fix5.lgf");
    return g;
}

const Presentation& two_cycle_pres() {
    static Presentation p = presentation(two_cycle_graph());
    return p;
}

void bm_aut_orbits(benchmark::State& state) {
    const LabelledGraph& g = two_cycle_graph();
    for (auto _ : state) benchmark::DoNotOptimize(aut_orbits(g));
}
BENCHMARK(bm_aut_orbits);

void bm_piece_bound(benchmark::State& state) {
    const LabelledGraph& g = two_cycle_graph();
    OrbitTable t = aut_orbits(g);
    for (auto _ : state) benchmark::DoNotOptimize(max_piece_length(g, t));
}
BENCHMARK(bm_piece_bound);

void bm_simple_cycles(benchmark::State& state) {
    const LabelledGraph& g = two_cycle_graph();
    for (auto _ : state) benchmark::DoNotOptimize(simple_cycles(g));
}
BENCHMARK(bm_simple_cycles);

void bm_certificate(benchmark::State& state) {
    const LabelledGraph& g = two_cycle_graph();
    for (auto _ : state) benchmark::DoNotOptimize(rh_certificate(g));
}
BENCHMARK(bm_certificate);

void bm_dehn_reduce(benchmark::State& state) {
    DehnReducer d(two_cycle_pres());
    // a trivial word long enough to need several passes
    const Word& r = two_cycle_pres().relators[0];
    Word w;
    for (int k = 0; k < 4; ++k) w = free_reduce(concat(w, r));
    for (auto _ : state) benchmark::DoNotOptimize(d.reduce(w));
}
BENCHMARK(bm_dehn_reduce);

void bm_cayley_ball(benchmark::State& state) {
    const Presentation& p = two_cycle_pres();
    for (auto _ : state)
        benchmark::DoNotOptimize(cayley_ball(p, int(state.range(0)), 2000000));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_cayley_ball)->DenseRange(2, 5);

void bm_geodesics(benchmark::State& state) {
    static Ball b = cayley_ball(two_cycle_pres(), 5);
    int u = -1, v = -1;
    for (int id = 0; id < b.n(); ++id) {
        if (b.length(id) == 2 && u < 0) u = id;
        if (b.length(id) == 3) v = id;
    }
    for (auto _ : state) benchmark::DoNotOptimize(b.geodesics(u, v));
}
BENCHMARK(bm_geodesics);

void bm_generate_maps(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(generate_maps(int(state.range(0))));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_generate_maps)->DenseRange(4, 6);

void bm_generate_quadrangles(benchmark::State& state) {
    for (auto _ : state) {
        long count = 0;
        generate_quadrangles(int(state.range(0)), [&](const Diagram&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(bm_generate_quadrangles)->DenseRange(5, 7);

}  // namespace

BENCHMARK_MAIN();
