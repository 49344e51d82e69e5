#include "doctest.h"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "treequest/bench.hpp"
#include "treequest/random_tree.hpp"

using namespace treequest;
using namespace treequest::testing;

TEST_SUITE("bench") {

TEST_CASE("naive mean is exactly d + 1") {
    const Tree t = random_tree(500, 2);
    const SearchIndex si(t);
    for (std::uint32_t d : {1u, 4u, 9u}) {
        const auto pairs = sample_pairs(t, d, 50, d, SamplerMode::Approximate);
        const std::vector<Algorithm> algos{Algorithm::Naive, Algorithm::Centroid};
        const auto recs = run_comparison(si, pairs, algos, {"t", 1, CostModel::Alg1});
        REQUIRE(recs.size() == 2);
        CHECK(recs[0].mean_queries == doctest::Approx(d + 1.0));
        CHECK(recs[0].stddev == doctest::Approx(0.0));
        CHECK(recs[1].mean_queries <= std::floor(std::log2(500.0)) + 1);
        CHECK(recs[0].pair_hash == recs[1].pair_hash);
    }
}

TEST_CASE("parallel and serial comparisons are identical") {
    const Tree t = random_tree_with_pathwidth(3000, 3, 4);
    const SearchIndex si(t);
    const auto pairs = sample_pairs(t, 7, 300, 3, SamplerMode::Approximate);
    const auto algos = all_algorithms();
    const RunLabel label{"x", 3, CostModel::Alg1};
    const auto par = run_comparison(si, pairs, algos, label, Execution::Parallel);
    const auto ser = run_comparison(si, pairs, algos, label, Execution::Serial);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].mean_queries == ser[i].mean_queries);
        CHECK(par[i].stddev == ser[i].stddev);
    }
}

TEST_CASE("prediction equal to target costs one query") {
    const Tree t = random_tree(200, 8);
    const SearchIndex si(t);
    std::vector<PairSample> same;
    for (Vertex v = 0; v < 50; ++v) {
        same.push_back({v, v, 0});
    }
    const std::vector<Algorithm> algos{Algorithm::KSpineOptimized};
    const auto recs = run_comparison(si, same, algos, {"t", 1, CostModel::Alg1});
    CHECK(recs[0].mean_queries == doctest::Approx(1.0));
}

TEST_CASE("crossing estimate") {
    const std::vector<std::uint32_t> d{5, 10, 20, 40};
    const std::vector<double> spine{1, 3, 7, 12};
    const std::vector<double> centroid{4, 5, 5, 5};
    const auto c = estimate_crossing(d, spine, centroid);
    REQUIRE(c);
    CHECK(c->d1 == 10);
    CHECK(c->d2 == 20);
    CHECK(c->d_cross == doctest::Approx(15.0));

    const std::vector<double> below{1, 1, 1, 1};
    CHECK_FALSE(estimate_crossing(d, below, centroid));
    const std::vector<double> short_series{1, 2};
    CHECK_THROWS_AS(estimate_crossing(d, short_series, centroid), InputError);
}

TEST_CASE("win interval") {
    const std::vector<std::uint32_t> d{1, 2, 3, 5, 7, 10};
    const std::vector<double> naive{2, 3, 4, 6, 8, 11};
    const std::vector<double> centroid{6, 6, 6, 6, 6, 6};
    const std::vector<double> spine{2, 2.5, 3, 5, 7, 9};
    const auto w = win_interval(d, spine, naive, centroid);
    REQUIRE(w);
    CHECK(w->lo == 2);
    CHECK(w->hi == 5);
    const std::vector<double> never{9, 9, 9, 9, 9, 9};
    CHECK_FALSE(win_interval(d, never, naive, centroid));
}

TEST_CASE("benchmark output is deterministic and well formed") {
    const Tree t = random_tree(1000, 12);
    const SearchIndex si(t);
    BenchConfig cfg;
    cfg.dataset = "smoke";
    cfg.trials = 30;
    cfg.seed = 7;
    cfg.d_grid = {1, 2, 5, 400};
    auto first = run_benchmark(si, cfg);
    auto second = run_benchmark(si, cfg, Execution::Serial);
    std::ostringstream a;
    std::ostringstream b;
    write_csv(a, first.records);
    write_csv(b, second.records);
    CHECK(a.str() == b.str());
    CHECK(first.skipped == std::vector<std::uint32_t>{400});
    CHECK(first.records.size() == 3 * cfg.algorithms.size());

    std::istringstream lines(a.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "dataset,n,k,d,algorithm,trials,mean_queries,stddev,seed,pair_hash,cost_model");
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 10);
        CHECK(line.find("smoke,1000,") == 0);
    }
    CHECK(rows == first.records.size());

    const BenchSummary s = summarize(first, cfg, t.size(), si.decomposition.pathwidth());
    std::ostringstream js;
    write_summary_json(js, s);
    const auto j = nlohmann::json::parse(js.str());
    CHECK(j["seed"] == 7);
    CHECK(j.contains("crossing"));
    CHECK(j.contains("win_interval"));
    CHECK(j["reference_scale"].get<double>() > 1.0);
    CHECK(j["skipped_d"].size() == 1);
}

}
