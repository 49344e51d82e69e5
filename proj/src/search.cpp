#include "treequest/search.hpp"

#include <array>
#include <ostream>

namespace treequest {

namespace {

using Memo = std::unordered_map<Vertex, OracleAnswer>;

// True when the classified answer ends the path search.
bool settle(PathSearchResult& r, const SpineAnswer& c, Vertex v) {
    if (c.kind == SpineDirection::Here) {
        r.found = true;
        r.vertex = v;
        return true;
    }
    if (c.kind == SpineDirection::OffSpine) {
        r.vertex = v;
        r.off = c.off_spine;
        return true;
    }
    return false;
}

// Phase loop of the spine search starting in component `comp` from s_cur. Answers already in
// `memo` are reused instead of asked again.
SearchTask<SearchOutcome> spine_phases(const SpineDecomposition& d, SpineId comp, Vertex s_cur, CostModel model,
                                       Memo* memo, SearchOutcome out) {
    for (;;) {
        const Spine& sp = d.spine(comp);
        if (sp.component_size == 1) {
            out.found = sp.path[0];
            if (model == CostModel::Confirming && !(memo && memo->contains(out.found))) {
                co_yield out.found;
                ++out.total_queries;
                ++out.pre_phase_queries;
            }
            co_return out;
        }

        SearchPhase ph;
        ph.spine = comp;
        ph.level = sp.level;
        ph.start = s_cur;
        ph.anchor = d.anchor(s_cur, comp);
        auto sub = exponential_path_search_task(sp.path, d.placement(ph.anchor).position);
        while (sub.advance()) {
            const Vertex v = sub.pending_query();
            if (memo) {
                if (auto it = memo->find(v); it != memo->end()) {
                    sub.provide(it->second);
                    continue;
                }
            }
            OracleAnswer ans = co_yield v;
            ++ph.queries;
            ++out.total_queries;
            if (memo) {
                memo->emplace(v, ans);
            }
            sub.provide(ans);
        }
        const PathSearchResult r = sub.result();
        ph.exit = r.vertex;
        out.phases.push_back(ph);
        if (r.found) {
            out.found = r.vertex;
            co_return out;
        }

        const SpineId child = d.child_containing(comp, r.off);
        // Keep s_cur when the target's component also holds it: jumping to y
        // could move away from the target.
        if (!d.contains(child, s_cur)) {
            s_cur = r.off;
        }
        comp = child;
    }
}

}  // namespace

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::Naive: return "naive";
        case Algorithm::Centroid: return "centroid";
        case Algorithm::KSpine: return "kspine";
        case Algorithm::KSpineOptimized: return "kspine_opt";
        case Algorithm::Robust: return "robust";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
    for (Algorithm a : all_algorithms()) {
        if (to_string(a) == name) {
            return a;
        }
    }
    return std::nullopt;
}

const std::vector<Algorithm>& all_algorithms() {
    static const std::vector<Algorithm> all{Algorithm::Naive, Algorithm::Centroid, Algorithm::KSpine,
                                            Algorithm::KSpineOptimized, Algorithm::Robust};
    return all;
}

std::string to_string(CostModel m) {
    return m == CostModel::Alg1 ? "alg1" : "confirming";
}

std::optional<CostModel> parse_cost_model(const std::string& name) {
    if (name == "alg1") {
        return CostModel::Alg1;
    }
    if (name == "confirming") {
        return CostModel::Confirming;
    }
    return std::nullopt;
}

void write_trace(std::ostream& out, const SearchOutcome& o) {
    out << "algorithm=" << to_string(o.algorithm) << " found=" << o.found << " queries=" << o.total_queries
        << " pre_phase=" << o.pre_phase_queries << '\n';
    for (const auto& ph : o.phases) {
        out << "phase spine=" << ph.spine << " level=" << unsigned(ph.level) << " start=" << ph.start
            << " anchor=" << ph.anchor << " exit=" << ph.exit << " queries=" << ph.queries << '\n';
    }
}

SearchTask<PathSearchResult> exponential_path_search_task(const PathInTree& path, std::size_t start) {
    PathSearchResult r;
    std::size_t pos = start;
    OracleAnswer ans = co_yield path[pos];
    ++r.queries;
    SpineAnswer c = interpret_on_spine(ans, path, pos);
    if (settle(r, c, path[pos])) {
        co_return r;
    }

    const SpineDirection forward = c.kind;
    const bool right = forward == SpineDirection::Right;
    const std::size_t room = right ? path.size() - 1 - start : start;
    auto at = [&](std::size_t off) { return right ? start + off : start - off; };

    std::size_t prev = 0;
    std::size_t off = 1;
    for (;;) {
        off = std::min(off, room);
        pos = at(off);
        ans = co_yield path[pos];
        ++r.queries;
        c = interpret_on_spine(ans, path, pos);
        if (settle(r, c, path[pos])) {
            co_return r;
        }
        if (c.kind != forward) {
            break;
        }
        if (off == room) {
            throw InvariantError("path search: endpoint points beyond the path");
        }
        prev = off;
        off *= 2;
    }

    // The exit lies strictly between offsets prev and off.
    std::size_t lo = prev;
    std::size_t hi = off;
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        pos = at(mid);
        ans = co_yield path[pos];
        ++r.queries;
        c = interpret_on_spine(ans, path, pos);
        if (settle(r, c, path[pos])) {
            co_return r;
        }
        if (c.kind == forward) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw InvariantError("path search: adjacent path vertices " + std::to_string(path[at(lo)]) + " and " +
                         std::to_string(path[at(hi)]) + " point away from each other");
}

PathSearchResult exponential_path_search(DirectionOracle& oracle, const PathInTree& path, std::size_t start) {
    auto task = exponential_path_search_task(path, start);
    while (task.advance()) {
        task.provide(oracle.query(task.pending_query()));
    }
    return task.result();
}

SearchOutcome naive_trace(DirectionOracle& oracle, Vertex s) {
    SearchOutcome out;
    out.algorithm = Algorithm::Naive;
    Vertex v = s;
    for (;;) {
        OracleAnswer ans = oracle.query(v);
        ++out.total_queries;
        ++out.pre_phase_queries;
        if (ans.is_here()) {
            out.found = v;
            return out;
        }
        v = ans.neighbor();
    }
}

SearchTask<SearchOutcome> kspine_search_task(const SpineDecomposition& decomp, Vertex s, CostModel model) {
    SearchOutcome out;
    out.algorithm = Algorithm::KSpine;
    return spine_phases(decomp, 0, s, model, nullptr, std::move(out));
}

SearchOutcome kspine_search(const SpineDecomposition& decomp, DirectionOracle& oracle, Vertex s, CostModel model) {
    oracle.tree().check_vertex(s);
    auto task = kspine_search_task(decomp, s, model);
    while (task.advance()) {
        task.provide(oracle.query(task.pending_query()));
    }
    return task.result();
}

SearchTask<SearchOutcome> kspine_search_optimized_task(const TreeIndex& index, const SpineDecomposition& decomp,
                                                       Vertex s, CostModel model) {
    SearchOutcome out;
    out.algorithm = Algorithm::KSpineOptimized;
    Memo memo;

    OracleAnswer first = co_yield s;
    ++out.total_queries;
    ++out.pre_phase_queries;
    memo.emplace(s, first);
    if (first.is_here()) {
        out.found = s;
        co_return out;
    }
    const Vertex y = first.neighbor();

    // The target is on y's side of s. Start in the lowest component that
    // holds all of that side: climb from y's component until no boundary
    // edge leads out into it.
    SpineId start = decomp.placement(y).spine;
    for (;;) {
        bool leaks = false;
        for (auto [u, w] : decomp.boundary(start)) {
            if (index.on_side(w, s, y)) {
                leaks = true;
                break;
            }
        }
        if (!leaks) {
            break;
        }
        start = decomp.spine(start).parent;
    }

    const Vertex s_cur = decomp.contains(start, s) ? s : y;
    auto inner = spine_phases(decomp, start, s_cur, model, &memo, std::move(out));
    while (inner.advance()) {
        inner.provide(co_yield inner.pending_query());
    }
    co_return std::move(inner.result());
}

SearchOutcome kspine_search_optimized(const TreeIndex& index, const SpineDecomposition& decomp,
                                      DirectionOracle& oracle, Vertex s, CostModel model) {
    oracle.tree().check_vertex(s);
    auto task = kspine_search_optimized_task(index, decomp, s, model);
    while (task.advance()) {
        task.provide(oracle.query(task.pending_query()));
    }
    return task.result();
}

SearchOutcome robust_combined(const TreeIndex& index, const SpineDecomposition& decomp,
                              const CentroidHierarchy& centroids, DirectionOracle& oracle, Vertex s,
                              CostModel model) {
    oracle.tree().check_vertex(s);
    auto by_centroid = centroid_search_task(centroids);
    auto by_spine = kspine_search_optimized_task(index, decomp, s, model);
    std::array<SearchTask<SearchOutcome>*, 2> tasks{&by_centroid, &by_spine};
    by_centroid.advance();
    by_spine.advance();

    SearchOutcome out;
    out.algorithm = Algorithm::Robust;
    const std::uint64_t before = oracle.query_count();
    for (std::size_t turn = 0;; turn ^= 1) {
        auto& task = *tasks[turn];
        if (task.done()) {
            out.found = task.result().found;
            break;
        }
        const Vertex v = task.pending_query();
        OracleAnswer ans = oracle.query(v);
        if (ans.is_here()) {
            out.found = v;
            break;
        }
        task.provide(ans);
        if (!task.advance()) {
            out.found = task.result().found;
            break;
        }
    }
    out.total_queries = oracle.query_count() - before;
    out.pre_phase_queries = out.total_queries;
    return out;
}

SearchIndex::SearchIndex(const Tree& t)
    : tree(&t), index(t), decomposition(build_decomposition(t)), centroids(t) {}

SearchIndex::SearchIndex(const Tree& t, SpineDecomposition decomp)
    : tree(&t), index(t), decomposition(std::move(decomp)), centroids(t) {}

SearchOutcome run_search(const SearchIndex& idx, Algorithm algorithm, DirectionOracle& oracle, Vertex s,
                         CostModel model) {
    switch (algorithm) {
        case Algorithm::Naive: return naive_trace(oracle, s);
        case Algorithm::Centroid: return centroid_search(idx.centroids, oracle);
        case Algorithm::KSpine: return kspine_search(idx.decomposition, oracle, s, model);
        case Algorithm::KSpineOptimized:
            return kspine_search_optimized(idx.index, idx.decomposition, oracle, s, model);
        case Algorithm::Robust:
            return robust_combined(idx.index, idx.decomposition, idx.centroids, oracle, s, model);
    }
    throw std::invalid_argument("unknown algorithm");
}

}  // namespace treequest
