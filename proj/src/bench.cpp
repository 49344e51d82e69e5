#include "treequest/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"
#include "treequest/parallel.hpp"
#include "treequest/rng.hpp"

namespace treequest {

std::vector<BenchRecord> run_comparison(const SearchIndex& idx, std::span<const PairSample> pairs,
                                        std::span<const Algorithm> algorithms, const RunLabel& label,
                                        Execution exec, int jobs) {
    if (pairs.empty()) {
        throw InputError("run_comparison needs at least one pair");
    }
    const std::uint32_t d = pairs.front().d;
    for (const auto& p : pairs) {
        if (p.d != d) {
            throw InputError("run_comparison: pairs mix distances");
        }
    }
    const std::uint64_t hash = pair_hash(pairs);
    const unsigned k = idx.decomposition.pathwidth();
    const auto count = static_cast<std::int64_t>(pairs.size());

    std::vector<BenchRecord> out;
    std::vector<std::uint64_t> queries(pairs.size());
    for (Algorithm a : algorithms) {
        for_each_index(count, exec, jobs, [&](std::int64_t i) {
            const PairSample& p = pairs[i];
            DirectionOracle oracle(idx.index, p.target);
            const SearchOutcome o = run_search(idx, a, oracle, p.prediction, label.cost_model);
            if (o.found != p.target || o.total_queries != oracle.query_count()) {
                throw InvariantError(to_string(a) + " failed on pair (" + std::to_string(p.prediction) + ", " +
                                     std::to_string(p.target) + ")");
            }
            queries[i] = o.total_queries;
        });
        std::uint64_t sum = 0;
        std::uint64_t sum_sq = 0;
        for (std::uint64_t q : queries) {
            sum += q;
            sum_sq += q * q;
        }
        BenchRecord r;
        r.dataset = label.dataset;
        r.n = idx.tree->size();
        r.k = k;
        r.d = d;
        r.algorithm = a;
        r.trials = pairs.size();
        const long double m = static_cast<long double>(sum) / r.trials;
        r.mean_queries = static_cast<double>(m);
        if (r.trials > 1) {
            const long double var = (static_cast<long double>(sum_sq) - m * static_cast<long double>(sum)) /
                                    static_cast<long double>(r.trials - 1);
            r.stddev = static_cast<double>(std::sqrt(std::max<long double>(var, 0)));
        }
        r.seed = label.seed;
        r.pair_hash = hash;
        r.cost_model = label.cost_model;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::uint32_t> default_d_grid() {
    return {1, 2, 3, 5, 7, 10, 14, 20, 28, 40, 56, 80, 113, 160};
}

std::vector<Algorithm> default_bench_algorithms() {
    return {Algorithm::Naive, Algorithm::Centroid, Algorithm::KSpineOptimized};
}

BenchRun run_benchmark(const SearchIndex& idx, const BenchConfig& config, Execution exec) {
    BenchRun run;
    const RunLabel label{config.dataset, config.seed, config.cost_model};
    for (std::uint32_t d : config.d_grid) {
        std::vector<PairSample> pairs;
        try {
            pairs = sample_pairs(*idx.tree, d, config.trials, mix_seed(config.seed, d), config.sampler,
                                 config.candidates);
        } catch (const InputError&) {
            run.skipped.push_back(d);
            continue;
        }
        auto recs = run_comparison(idx, pairs, config.algorithms, label, exec, config.jobs);
        run.records.insert(run.records.end(), recs.begin(), recs.end());
    }
    return run;
}

std::optional<CrossingEstimate> estimate_crossing(std::span<const std::uint32_t> d, std::span<const double> spine,
                                                  std::span<const double> centroid) {
    if (spine.size() != d.size() || centroid.size() != d.size()) {
        throw InputError("crossing estimate: series do not share the grid");
    }
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        const double a = spine[i] - centroid[i];
        const double b = spine[i + 1] - centroid[i + 1];
        if ((a < 0 && b > 0) || (a > 0 && b < 0)) {
            CrossingEstimate c;
            c.d1 = d[i];
            c.d2 = d[i + 1];
            c.d_cross = d[i] + (d[i + 1] - static_cast<double>(d[i])) * (a / (a - b));
            return c;
        }
    }
    return std::nullopt;
}

std::optional<WinInterval> win_interval(std::span<const std::uint32_t> d, std::span<const double> spine,
                                        std::span<const double> naive, std::span<const double> centroid) {
    if (spine.size() != d.size() || naive.size() != d.size() || centroid.size() != d.size()) {
        throw InputError("win interval: series do not share the grid");
    }
    std::optional<WinInterval> best;
    std::size_t best_len = 0;
    std::size_t i = 0;
    while (i < d.size()) {
        if (!(spine[i] < naive[i] && spine[i] < centroid[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < d.size() && spine[j + 1] < naive[j + 1] && spine[j + 1] < centroid[j + 1]) {
            ++j;
        }
        if (j - i + 1 > best_len) {
            best_len = j - i + 1;
            best = WinInterval{d[i], d[j]};
        }
        i = j + 1;
    }
    return best;
}

std::vector<double> series(std::span<const BenchRecord> records, Algorithm a, std::span<const std::uint32_t> grid) {
    std::vector<double> out;
    for (std::uint32_t d : grid) {
        for (const auto& r : records) {
            if (r.algorithm == a && r.d == d) {
                out.push_back(r.mean_queries);
                break;
            }
        }
    }
    if (out.size() != grid.size()) {
        out.clear();
    }
    return out;
}

std::optional<Algorithm> spine_series_algorithm(std::span<const BenchRecord> records) {
    bool plain = false;
    for (const auto& r : records) {
        if (r.algorithm == Algorithm::KSpineOptimized) {
            return Algorithm::KSpineOptimized;
        }
        plain = plain || r.algorithm == Algorithm::KSpine;
    }
    return plain ? std::optional(Algorithm::KSpine) : std::nullopt;
}

void write_csv_header(std::ostream& out) {
    out << "dataset,n,k,d,algorithm,trials,mean_queries,stddev,seed,pair_hash,cost_model\n";
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
    write_csv_header(out);
    char buf[64];
    for (const auto& r : records) {
        out << r.dataset << ',' << r.n << ',' << r.k << ',' << r.d << ',' << to_string(r.algorithm) << ','
            << r.trials << ',';
        std::snprintf(buf, sizeof buf, "%.4f,%.4f", r.mean_queries, r.stddev);
        out << buf << ',' << r.seed << ',';
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(r.pair_hash));
        out << buf << ',' << to_string(r.cost_model) << '\n';
    }
}

BenchSummary summarize(const BenchRun& run, const BenchConfig& config, std::size_t n, unsigned k) {
    BenchSummary s;
    s.dataset = config.dataset;
    s.n = n;
    s.k = k;
    s.config = config;
    s.skipped = run.skipped;
    for (std::uint32_t d : config.d_grid) {
        if (std::find(run.skipped.begin(), run.skipped.end(), d) == run.skipped.end()) {
            s.grid.push_back(d);
        }
    }
    const auto spine_alg = spine_series_algorithm(run.records);
    if (!spine_alg) {
        return s;
    }
    const auto spine = series(run.records, *spine_alg, s.grid);
    const auto centroid = series(run.records, Algorithm::Centroid, s.grid);
    const auto naive = series(run.records, Algorithm::Naive, s.grid);
    if (!spine.empty() && !centroid.empty()) {
        s.crossing = estimate_crossing(s.grid, spine, centroid);
        if (!naive.empty()) {
            s.win = win_interval(s.grid, spine, naive, centroid);
        }
    }
    return s;
}

void write_summary_json(std::ostream& out, const BenchSummary& s) {
    using nlohmann::json;
    json j;
    j["dataset"] = s.dataset;
    j["n"] = s.n;
    j["k"] = s.k;
    j["root"] = s.root ? json(*s.root) : json(nullptr);
    j["reference_scale"] = s.k > 0 ? std::pow(static_cast<double>(s.n), 1.0 / s.k) : 0.0;
    if (s.ingest) {
        j["ingest"] = {{"data_lines", s.ingest->data_lines},
                       {"comment_lines", s.ingest->comment_lines},
                       {"raw_edges", s.ingest->raw_edges},
                       {"self_loops", s.ingest->self_loops},
                       {"duplicate_edges", s.ingest->duplicate_edges}};
    }
    if (s.source_vertices) {
        j["source_vertices"] = *s.source_vertices;
    }
    std::vector<std::string> algos;
    for (Algorithm a : s.config.algorithms) {
        algos.push_back(to_string(a));
    }
    j["seed"] = s.config.seed;
    j["trials"] = s.config.trials;
    j["sampler"] = to_string(s.config.sampler);
    j["candidates"] = s.config.candidates;
    j["cost_model"] = to_string(s.config.cost_model);
    j["algorithms"] = algos;
    j["d_grid"] = s.grid;
    j["skipped_d"] = s.skipped;
    if (s.crossing) {
        j["crossing"] = {{"d_cross", s.crossing->d_cross},
                         {"d1", s.crossing->d1},
                         {"d2", s.crossing->d2},
                         {"method", s.crossing->method}};
    } else {
        j["crossing"] = nullptr;
    }
    if (s.win) {
        j["win_interval"] = {{"lo", s.win->lo}, {"hi", s.win->hi}};
    } else {
        j["win_interval"] = nullptr;
    }
    out << j.dump(2) << '\n';
}

}  // namespace treequest
