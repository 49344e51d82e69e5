// treequest: command line front end for the tree search library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "treequest/bench.hpp"
#include "treequest/decomposition_cache.hpp"
#include "treequest/graph_io.hpp"
#include "treequest/hard_instance.hpp"
#include "treequest/pathwidth.hpp"
#include "treequest/random_tree.hpp"
#include "treequest/search.hpp"

using namespace treequest;

namespace {

enum Exit { kOk = 0, kUsage = 2, kInput = 3, kInvariant = 4 };

struct InputOptions {
    std::string path;
    std::string format = "auto";
    std::string root;  // input label; empty = automatic
    bool spanning_tree = false;
};

struct LoadedTree {
    Tree tree;
    std::string dataset;
    IngestStats stats;
    std::size_t source_vertices = 0;
    std::optional<Vertex> root;
};

void add_input(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("input", in.path, "edge list or MatrixMarket file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--format", in.format, "auto, edge-list or matrix-market")
        ->check(CLI::IsMember({"auto", "edge-list", "matrix-market"}));
    auto* st = cmd->add_flag("--spanning-tree", in.spanning_tree,
                             "take the largest component and a DFS spanning tree instead of requiring a tree");
    cmd->add_option("--root", in.root, "DFS root label for --spanning-tree (default: low-degree peripheral vertex)")
        ->needs(st);
}

LoadedTree load_input(const InputOptions& in) {
    RawGraph g = load_graph_file(in.path, parse_graph_format(in.format));
    LoadedTree out;
    out.dataset = std::filesystem::path(in.path).stem().string();
    out.stats = g.stats;
    out.source_vertices = g.vertex_count();
    if (!in.spanning_tree) {
        out.tree = tree_from_graph(g);
        return out;
    }
    RawGraph lcc = largest_component(g);
    Vertex root = 0;
    if (in.root.empty()) {
        root = peripheral_root(lcc);
    } else {
        auto it = std::find(lcc.labels.begin(), lcc.labels.end(), in.root);
        if (it == lcc.labels.end()) {
            throw InputError("root '" + in.root + "' is not in the largest component");
        }
        root = static_cast<Vertex>(it - lcc.labels.begin());
    }
    out.root = root;
    out.tree = dfs_spanning_tree(lcc, root);
    return out;
}

SpineDecomposition obtain_decomposition(const Tree& tree) {
    if (const char* dir = std::getenv("TREEQUEST_CACHE_DIR"); dir && *dir) {
        auto cached = load_or_build_decomposition(tree, dir);
        if (!cached.warning.empty()) {
            std::cerr << "warning: " << cached.warning << '\n';
        }
        return std::move(cached.decomposition);
    }
    return build_decomposition(tree);
}

std::vector<std::uint32_t> parse_grid(const std::string& text) {
    std::vector<std::uint32_t> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || v == 0) {
            throw CLI::ValidationError("--d-grid", "expected positive integers separated by commas");
        }
        grid.push_back(static_cast<std::uint32_t>(v));
    }
    if (grid.empty()) {
        throw CLI::ValidationError("--d-grid", "empty grid");
    }
    return grid;
}

std::vector<Algorithm> parse_algos(const std::string& text) {
    std::vector<Algorithm> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto a = parse_algorithm(item);
        if (!a) {
            throw CLI::ValidationError("--algos", "unknown algorithm '" + item + "'");
        }
        out.push_back(*a);
    }
    return out;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream o(path);
    if (!o) {
        throw InputError("cannot write " + path);
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Search on trees with direction queries and distance predictions"};
    app.require_subcommand(1);

    // pathwidth
    InputOptions pw_in;
    auto* pw_cmd = app.add_subcommand("pathwidth", "print vertex count and exact pathwidth");
    add_input(pw_cmd, pw_in);

    // decompose
    InputOptions dec_in;
    std::string dec_out;
    auto* dec_cmd = app.add_subcommand("decompose", "build, validate and store the spine decomposition");
    add_input(dec_cmd, dec_in);
    dec_cmd->add_option("--out", dec_out, "cache file (default: under $TREEQUEST_CACHE_DIR)");

    // search
    InputOptions s_in;
    Vertex s_pred = 0;
    Vertex s_target = 0;
    std::string s_algo = "kspine";
    std::string s_cost = "alg1";
    bool s_log = false;
    auto* s_cmd = app.add_subcommand("search", "run one search and print its trace");
    add_input(s_cmd, s_in);
    s_cmd->add_option("-s,--prediction", s_pred, "predicted vertex id")->required();
    s_cmd->add_option("-t,--target", s_target, "hidden target vertex id")->required();
    s_cmd->add_option("--algo", s_algo, "naive, centroid, kspine, kspine_opt or robust");
    s_cmd->add_option("--cost-model", s_cost, "alg1 or confirming")->check(CLI::IsMember({"alg1", "confirming"}));
    s_cmd->add_flag("--log", s_log, "print every query and answer");

    // bench
    InputOptions b_in;
    std::string b_out;
    std::string b_dataset;
    std::string b_grid;
    std::string b_algos;
    std::string b_cost = "alg1";
    std::size_t b_trials = 200;
    std::uint64_t b_seed = 1;
    int b_jobs = 0;
    bool b_exact = false;
    std::size_t b_candidates = 256;
    auto* b_cmd = app.add_subcommand("bench", "compare strategies over sampled (prediction, target) pairs");
    add_input(b_cmd, b_in);
    b_cmd->add_option("--out", b_out, "CSV path; the summary goes to <out>.json")->required();
    b_cmd->add_option("--dataset", b_dataset, "dataset name in the CSV (default: input file stem)");
    b_cmd->add_option("--d-grid", b_grid, "comma separated distances");
    b_cmd->add_option("--algos", b_algos, "comma separated algorithms");
    b_cmd->add_option("--trials", b_trials, "pairs per distance")->check(CLI::PositiveNumber);
    b_cmd->add_option("--seed", b_seed, "sampling seed");
    b_cmd->add_option("--jobs", b_jobs, "worker threads (0 = all)")->check(CLI::NonNegativeNumber);
    b_cmd->add_option("--cost-model", b_cost, "alg1 or confirming")->check(CLI::IsMember({"alg1", "confirming"}));
    auto* exact = b_cmd->add_flag("--exact-sampler", b_exact, "uniform over all pairs (small trees)");
    b_cmd->add_option("--candidates", b_candidates, "source candidates for the approximate sampler")
        ->check(CLI::PositiveNumber)
        ->excludes(exact);

    // gen-hard
    unsigned gh_k = 0;
    unsigned gh_l = 0;
    std::string gh_out;
    auto* gh_cmd = app.add_subcommand("gen-hard", "write the lower-bound tree and its target list");
    gh_cmd->add_option("k", gh_k, "levels")->required();
    gh_cmd->add_option("l", gh_l, "path length per level")->required();
    gh_cmd->add_option("--out", gh_out, "edge list path; targets go to <out>.targets")->required();

    // gen-random
    std::size_t gr_n = 0;
    std::optional<unsigned> gr_k;
    std::uint64_t gr_seed = 1;
    std::string gr_out;
    auto* gr_cmd = app.add_subcommand("gen-random", "write a random tree");
    gr_cmd->add_option("n", gr_n, "vertex count")->required()->check(CLI::PositiveNumber);
    gr_cmd->add_option("--pathwidth", gr_k, "exact pathwidth of the generated tree");
    gr_cmd->add_option("--seed", gr_seed, "generator seed");
    gr_cmd->add_option("--out", gr_out, "edge list path")->required();

    // validate
    InputOptions v_in;
    std::string v_cache;
    auto* v_cmd = app.add_subcommand("validate", "check a tree and its decomposition");
    add_input(v_cmd, v_in);
    v_cmd->add_option("--cache", v_cache, "decomposition cache file to check instead of rebuilding")
        ->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*pw_cmd) {
            const LoadedTree in = load_input(pw_in);
            std::cout << "n=" << in.tree.size() << " k=" << pathwidth(in.tree).value << '\n';
        } else if (*dec_cmd) {
            const LoadedTree in = load_input(dec_in);
            const SpineDecomposition d = build_decomposition(in.tree);
            const auto problems = check_decomposition(in.tree, d);
            if (!problems.empty()) {
                throw InvariantError("decomposition failed validation: " + problems.front());
            }
            std::string target = dec_out;
            if (target.empty()) {
                const char* dir = std::getenv("TREEQUEST_CACHE_DIR");
                if (!dir || !*dir) {
                    throw InputError("give --out or set TREEQUEST_CACHE_DIR");
                }
                std::filesystem::create_directories(dir);
                target = cache_file_for(in.tree, dir).string();
            }
            auto o = open_out(target);
            write_decomposition(o, in.tree, d);
            std::cout << "n=" << in.tree.size() << " k=" << d.pathwidth() << " spines=" << d.spine_count()
                      << " depth=" << d.max_depth() << " cache=" << target << '\n';
        } else if (*s_cmd) {
            const auto algo = parse_algorithm(s_algo);
            if (!algo) {
                std::cerr << "unknown algorithm '" << s_algo << "'\n";
                return kUsage;
            }
            const LoadedTree in = load_input(s_in);
            in.tree.check_vertex(s_pred);
            in.tree.check_vertex(s_target);
            const SearchIndex idx(in.tree, obtain_decomposition(in.tree));
            DirectionOracle oracle(idx.index, s_target);
            if (s_log) {
                oracle.enable_log();
            }
            const SearchOutcome out = run_search(idx, *algo, oracle, s_pred, *parse_cost_model(s_cost));
            if (out.found != s_target) {
                throw InvariantError("search returned the wrong vertex");
            }
            std::cout << "found=" << out.found << " queries=" << out.total_queries << " d="
                      << idx.index.distance(s_pred, s_target) << " k=" << idx.decomposition.pathwidth() << '\n';
            write_trace(std::cout, out);
            if (s_log) {
                oracle.write_log(std::cout);
            }
        } else if (*b_cmd) {
            BenchConfig cfg;
            if (!b_grid.empty()) {
                cfg.d_grid = parse_grid(b_grid);
            }
            if (!b_algos.empty()) {
                cfg.algorithms = parse_algos(b_algos);
            }
            cfg.trials = b_trials;
            cfg.seed = b_seed;
            cfg.jobs = b_jobs;
            cfg.sampler = b_exact ? SamplerMode::Exact : SamplerMode::Approximate;
            cfg.candidates = b_candidates;
            cfg.cost_model = *parse_cost_model(b_cost);

            const LoadedTree in = load_input(b_in);
            cfg.dataset = b_dataset.empty() ? in.dataset : b_dataset;
            const SearchIndex idx(in.tree, obtain_decomposition(in.tree));
            const BenchRun run = run_benchmark(idx, cfg);
            {
                auto o = open_out(b_out);
                write_csv(o, run.records);
            }
            BenchSummary summary = summarize(run, cfg, in.tree.size(), idx.decomposition.pathwidth());
            summary.root = in.root;
            summary.ingest = in.stats;
            summary.source_vertices = in.source_vertices;
            {
                auto o = open_out(b_out + ".json");
                write_summary_json(o, summary);
            }
            std::cout << "dataset=" << cfg.dataset << " n=" << summary.n << " k=" << summary.k
                      << " seed=" << cfg.seed << " rows=" << run.records.size();
            if (summary.crossing) {
                std::cout << " crossing=" << summary.crossing->d_cross;
            } else {
                std::cout << " crossing=none";
            }
            if (summary.win) {
                std::cout << " win=" << summary.win->lo << "-" << summary.win->hi;
            } else {
                std::cout << " win=none";
            }
            std::cout << '\n';
            for (std::uint32_t d : run.skipped) {
                std::cerr << "note: no pair at distance " << d << "; skipped\n";
            }
        } else if (*gh_cmd) {
            const HardInstance inst = build_hard_instance(gh_k, gh_l);
            {
                auto o = open_out(gh_out);
                o << "# hard instance k=" << gh_k << " l=" << gh_l << " n=" << inst.tree.size() << '\n';
                write_edge_list(o, inst.tree);
            }
            {
                auto o = open_out(gh_out + ".targets");
                o << "# alpha vertex distance (prediction " << inst.root() << ")\n";
                for (std::uint64_t i = 0; i < inst.target_count(); ++i) {
                    const TargetIndex alpha = decode_target(inst, i);
                    for (std::size_t j = 0; j < alpha.size(); ++j) {
                        o << (j ? "," : "") << alpha[j];
                    }
                    o << ' ' << target_vertex(inst, alpha) << ' ' << target_distance(alpha) << '\n';
                }
            }
            std::cout << "n=" << inst.tree.size() << " k=" << gh_k << " targets=" << inst.target_count() << '\n';
            if (!inst.in_bound_regime()) {
                std::cerr << "note: l < k^2, outside the range where the lower bound applies\n";
            }
        } else if (*gr_cmd) {
            const Tree t = gr_k ? random_tree_with_pathwidth(gr_n, *gr_k, gr_seed) : random_tree(gr_n, gr_seed);
            auto o = open_out(gr_out);
            o << "# random tree n=" << gr_n << " seed=" << gr_seed;
            if (gr_k) {
                o << " pathwidth=" << *gr_k;
            }
            o << '\n';
            write_edge_list(o, t);
            std::cout << "n=" << t.size() << " seed=" << gr_seed << '\n';
        } else if (*v_cmd) {
            const LoadedTree in = load_input(v_in);
            const SpineDecomposition d = [&] {
                if (v_cache.empty()) {
                    return build_decomposition(in.tree);
                }
                std::ifstream f(v_cache);
                return read_decomposition(f, in.tree);
            }();
            const auto problems = check_decomposition(in.tree, d);
            for (const auto& p : problems) {
                std::cout << "violation: " << p << '\n';
            }
            if (!problems.empty()) {
                return kInvariant;
            }
            std::cout << "ok n=" << in.tree.size() << " k=" << d.pathwidth() << " spines=" << d.spine_count()
                      << '\n';
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const InvariantError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kOk;
}
