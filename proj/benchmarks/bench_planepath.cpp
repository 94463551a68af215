#include <planepath/explore.hpp>
#include <planepath/io.hpp>
#include <planepath/plan.hpp>

#include <benchmark/benchmark.h>

using namespace planepath;

namespace {

PointSet make_set(std::uint64_t seed, int outer, int inner) {
    GenSpec sp;
    sp.seed = seed;
    sp.n = outer + inner;
    sp.layer_profile = {outer, inner};
    return generate_point_set(sp);
}

void BM_enumerate_free(benchmark::State& state) {
    const PointSet s = make_set(11, 3, static_cast<int>(state.range(0)) - 3);
    for (auto _ : state) {
        auto paths = enumerate_paths(s);
        benchmark::DoNotOptimize(paths);
    }
}

void BM_enumerate_fixed(benchmark::State& state) {
    const PointSet s = make_set(11, 3, static_cast<int>(state.range(0)) - 3);
    const int start = s.layers()[0][0];
    for (auto _ : state) {
        auto paths = enumerate_paths_fixed_start(s, start);
        benchmark::DoNotOptimize(paths);
    }
}

void BM_build_graph_free(benchmark::State& state) {
    const PointSet s = make_set(11, 3, static_cast<int>(state.range(0)) - 3);
    for (auto _ : state) {
        FlipGraph g = build_flip_graph(s, GraphMode::Free);
        benchmark::DoNotOptimize(g);
    }
}

void BM_flip_distance(benchmark::State& state) {
    const PointSet s = make_set(11, 3, static_cast<int>(state.range(0)) - 3);
    auto paths = enumerate_paths(s);
    const auto& from = paths.front();
    const auto& to = paths.back();
    for (auto _ : state) {
        auto d = flip_distance(s, from, to, GraphMode::Free);
        benchmark::DoNotOptimize(d);
    }
}

void BM_to_suffix_independent(benchmark::State& state) {
    const PointSet s = make_set(11, 3, static_cast<int>(state.range(0)) - 3);
    const int start = s.layers()[0][0];
    auto paths = enumerate_paths_fixed_start(s, start);
    std::size_t i = 0;
    for (auto _ : state) {
        auto plan = to_suffix_independent_plan(PathOnSet(s, paths[i]), start);
        benchmark::DoNotOptimize(plan);
        i = (i + 1) % paths.size();
    }
}

void BM_two_layer_plan(benchmark::State& state) {
    const PointSet s = make_set(11, 3, static_cast<int>(state.range(0)) - 3);
    auto paths = enumerate_paths(s);
    std::size_t i = 0;
    for (auto _ : state) {
        auto plan = two_layer_plan(PathOnSet(s, paths[i]),
                                   PathOnSet(s, paths[paths.size() - 1 - i]));
        benchmark::DoNotOptimize(plan);
        i = (i + 1) % paths.size();
    }
}

BENCHMARK(BM_enumerate_free)->Arg(6)->Arg(7)->Arg(8);
BENCHMARK(BM_enumerate_fixed)->Arg(6)->Arg(7)->Arg(8);
BENCHMARK(BM_build_graph_free)->Arg(6)->Arg(7);
BENCHMARK(BM_flip_distance)->Arg(6)->Arg(7);
BENCHMARK(BM_to_suffix_independent)->Arg(6)->Arg(7)->Arg(8);
BENCHMARK(BM_two_layer_plan)->Arg(6)->Arg(7)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
