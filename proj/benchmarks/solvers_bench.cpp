#include "happy/generators.hpp"
#include "happy/kernel.hpp"
#include "happy/oracle.hpp"
#include "happy/partition.hpp"
#include "happy/tree_dp.hpp"
#include "happy/treewidth_dp.hpp"
#include "happy/two_color.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace happy;

Instance make(GraphModel model, int n, int k, double p, double precolor, Problem problem = Problem::edges) {
    GenParams params;
    params.model = model;
    params.n = n;
    params.k = k;
    params.p = p;
    params.precolor_fraction = precolor;
    params.problem = problem;
    params.weighted = true;
    params.seed = static_cast<std::uint64_t>(n) * 31 + static_cast<std::uint64_t>(k);
    return generate(params);
}

void BM_TreeDP(benchmark::State& state) {
    auto inst = make(GraphModel::random_tree, static_cast<int>(state.range(0)), 4, 0, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_tree_mhe(inst).happy_weight);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TreeDP)->RangeMultiplier(2)->Range(1 << 10, 1 << 17)->Complexity(benchmark::oN);

void BM_FlowMhe(benchmark::State& state) {
    auto inst = make(GraphModel::gnp, static_cast<int>(state.range(0)), 2, 8.0 / static_cast<double>(state.range(0)), 0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_mhe_2(inst).happy_weight);
    }
}
BENCHMARK(BM_FlowMhe)->RangeMultiplier(4)->Range(64, 4096);

void BM_FlowMhv(benchmark::State& state) {
    auto inst = make(GraphModel::gnp, static_cast<int>(state.range(0)), 2, 4.0 / static_cast<double>(state.range(0)), 0.2,
                     Problem::vertices);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_mhv_2(inst).happy_weight);
    }
}
BENCHMARK(BM_FlowMhv)->RangeMultiplier(4)->Range(64, 4096);

void BM_Exact3n(benchmark::State& state) {
    auto inst = make(GraphModel::gnp, static_cast<int>(state.range(0)) + 4, 3, 0.3, 0.0);
    for (Vertex v = 0; v < 4; ++v) {
        inst.precolor[static_cast<std::size_t>(v)] = v % 3 + 1;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_exact(inst).happy_weight);
    }
}
BENCHMARK(BM_Exact3n)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_K3Split(benchmark::State& state) {
    auto inst = make(GraphModel::gnp, static_cast<int>(state.range(0)) + 3, 3, 0.3, 0.0);
    for (Vertex v = 0; v < 3; ++v) {
        inst.precolor[static_cast<std::size_t>(v)] = v + 1;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_k3_split(inst).happy_weight);
    }
}
BENCHMARK(BM_K3Split)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_Twdp(benchmark::State& state) {
    auto inst = make(GraphModel::random_tree, static_cast<int>(state.range(0)), 3, 0, 0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_twdp(inst).happy_weight);
    }
}
BENCHMARK(BM_Twdp)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

void BM_Kernelize(benchmark::State& state) {
    auto inst = make(GraphModel::gnp, static_cast<int>(state.range(0)), 3, 0.1, 0.3);
    const Weight ell = inst.total_edge_weight() / 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernelize(inst, ell).index());
    }
}
BENCHMARK(BM_Kernelize)->RangeMultiplier(4)->Range(64, 1024);

void BM_Oracle(benchmark::State& state) {
    auto inst = make(GraphModel::gnp, static_cast<int>(state.range(0)), 3, 0.3, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_brute(inst).happy_weight);
    }
}
BENCHMARK(BM_Oracle)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
