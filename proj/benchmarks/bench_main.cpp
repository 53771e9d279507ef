#include <benchmark/benchmark.h>

#include "qwalk/charpoly.hpp"
#include "qwalk/enumerate.hpp"
#include "qwalk/pst.hpp"
#include "qwalk/search.hpp"

using namespace qwalk;

static void BM_Charpoly(benchmark::State& state) {
    Rng rng(1);
    const Graph g = random_connected_graph(static_cast<std::size_t>(state.range(0)), 0.4, rng);
    for (auto _ : state) benchmark::DoNotOptimize(charpoly(g));
}
BENCHMARK(BM_Charpoly)->Arg(8)->Arg(16)->Arg(32);

static void BM_Decompose(benchmark::State& state) {
    Rng rng(2);
    const Graph g = random_connected_graph(static_cast<std::size_t>(state.range(0)), 0.4, rng);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(g));
}
BENCHMARK(BM_Decompose)->Arg(8)->Arg(16)->Arg(32);

static void BM_PstCertificateDoubleStar(benchmark::State& state) {
    const Composed d = double_star(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(pst_certificate(d.graph, d.a, d.b));
}
BENCHMARK(BM_PstCertificateDoubleStar)->Arg(2)->Arg(6);

static void BM_FidelityScan(benchmark::State& state) {
    const Composed d = extended_double_star(3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(fidelity_scan(d.graph, d.a, d.b, 200.0, 200000));
}
BENCHMARK(BM_FidelityScan)->Unit(benchmark::kMillisecond);

static void BM_Search(benchmark::State& state) {
    const auto marked = marked_connected_graphs(static_cast<std::size_t>(state.range(0)));
    SearchOptions options;
    options.bridge_vertices = 2;
    for (auto _ : state) benchmark::DoNotOptimize(search_no_pst(marked, options));
}
BENCHMARK(BM_Search)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
