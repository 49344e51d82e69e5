#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treequest/graph_io.hpp"
#include "treequest/sampling.hpp"
#include "treequest/search.hpp"

namespace treequest {

struct BenchRecord {
    std::string dataset;
    std::size_t n = 0;
    unsigned k = 0;
    std::uint32_t d = 0;
    Algorithm algorithm = Algorithm::Naive;
    std::size_t trials = 0;
    double mean_queries = 0.0;
    double stddev = 0.0;  // sample standard deviation
    std::uint64_t seed = 0;
    std::uint64_t pair_hash = 0;
    CostModel cost_model = CostModel::Alg1;
};

struct RunLabel {
    std::string dataset;
    std::uint64_t seed = 0;
    CostModel cost_model = CostModel::Alg1;
};

/*
 * Runs every algorithm once per pair against a fresh oracle and aggregates
 * per algorithm. All pairs must share one distance. Aggregation uses
 * integer sums, so the result does not depend on thread scheduling.
 * Throws InvariantError if any run misses its target.
 */
std::vector<BenchRecord> run_comparison(const SearchIndex& idx, std::span<const PairSample> pairs,
                                        std::span<const Algorithm> algorithms, const RunLabel& label,
                                        Execution exec = Execution::Parallel, int jobs = 0);

std::vector<std::uint32_t> default_d_grid();
std::vector<Algorithm> default_bench_algorithms();

struct BenchConfig {
    std::string dataset = "tree";
    std::vector<std::uint32_t> d_grid = default_d_grid();
    std::size_t trials = 200;
    std::uint64_t seed = 1;
    std::vector<Algorithm> algorithms = default_bench_algorithms();
    SamplerMode sampler = SamplerMode::Approximate;
    std::size_t candidates = 256;
    CostModel cost_model = CostModel::Alg1;
    int jobs = 0;
};

struct BenchRun {
    std::vector<BenchRecord> records;
    std::vector<std::uint32_t> skipped;  // grid distances with no pair
};

/// Samples pairs per grid distance (seed mixed with d) and compares on them.
BenchRun run_benchmark(const SearchIndex& idx, const BenchConfig& config, Execution exec = Execution::Parallel);

struct CrossingEstimate {
    double d_cross = 0.0;
    std::uint32_t d1 = 0;
    std::uint32_t d2 = 0;
    std::string method = "linear";
};

/// First sign change of spine - centroid along the grid, linearly interpolated.
std::optional<CrossingEstimate> estimate_crossing(std::span<const std::uint32_t> d, std::span<const double> spine,
                                                  std::span<const double> centroid);

struct WinInterval {
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;
};

/// Longest run of grid points where spine is strictly below both baselines (first on ties).
std::optional<WinInterval> win_interval(std::span<const std::uint32_t> d, std::span<const double> spine,
                                        std::span<const double> naive, std::span<const double> centroid);

/// Mean series of one algorithm over the grid, in grid order; empty if absent.
std::vector<double> series(std::span<const BenchRecord> records, Algorithm a, std::span<const std::uint32_t> grid);

/// kspine_opt when present, else kspine.
std::optional<Algorithm> spine_series_algorithm(std::span<const BenchRecord> records);

void write_csv_header(std::ostream& out);
void write_csv(std::ostream& out, std::span<const BenchRecord> records);

struct BenchSummary {
    std::string dataset;
    std::size_t n = 0;
    unsigned k = 0;
    std::optional<Vertex> root;  // DFS root used to build the tree, if any
    std::optional<IngestStats> ingest;
    std::optional<std::size_t> source_vertices;  // before LCC and spanning tree
    BenchConfig config;
    std::vector<std::uint32_t> grid;  // distances actually measured
    std::vector<std::uint32_t> skipped;
    std::optional<CrossingEstimate> crossing;
    std::optional<WinInterval> win;
};

/// Fills crossing and win interval from records.
BenchSummary summarize(const BenchRun& run, const BenchConfig& config, std::size_t n, unsigned k);

/// JSON sidecar next to the CSV.
void write_summary_json(std::ostream& out, const BenchSummary& summary);

}  // namespace treequest
