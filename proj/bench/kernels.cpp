// Serial vs OpenMP timings for the two batch kernels: the pair comparison
// behind `bench` and the exhaustive hard-instance experiment.

#include <benchmark/benchmark.h>

#include "treequest/bench.hpp"
#include "treequest/hard_instance.hpp"
#include "treequest/random_tree.hpp"

using namespace treequest;

namespace {

struct PairFixture {
    Tree tree = random_tree_with_pathwidth(50000, 4, 11);
    SearchIndex idx{tree};
    std::vector<PairSample> pairs = sample_pairs(tree, 20, 2000, 3, SamplerMode::Approximate);
};

const PairFixture& pair_fixture() {
    static const PairFixture f;
    return f;
}

struct HardFixture {
    HardInstance inst = build_hard_instance(4, 8);
    SearchIndex idx{inst.tree};
};

const HardFixture& hard_fixture() {
    static const HardFixture f;
    return f;
}

void comparison(benchmark::State& state, Execution exec) {
    const auto& f = pair_fixture();
    const auto algos = all_algorithms();
    const RunLabel label{"bench", 3, CostModel::Alg1};
    for (auto _ : state) {
        auto records = run_comparison(f.idx, f.pairs, algos, label, exec);
        benchmark::DoNotOptimize(records);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * f.pairs.size() * algos.size()));
}

void distributional(benchmark::State& state, Execution exec) {
    const auto& f = hard_fixture();
    for (auto _ : state) {
        auto r = distributional_experiment(f.inst, f.idx, Algorithm::Robust, CostModel::Alg1, std::nullopt, 1, exec);
        benchmark::DoNotOptimize(r.mean);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * f.inst.target_count()));
}

}  // namespace

BENCHMARK_CAPTURE(comparison, serial, Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(comparison, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(distributional, serial, Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(distributional, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
