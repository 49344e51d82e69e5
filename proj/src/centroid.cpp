#include "treequest/centroid.hpp"

#include <algorithm>

namespace treequest {

namespace {

struct Scratch {
    std::vector<Vertex> order;
    std::vector<Vertex> parent;
    std::vector<std::uint32_t> size;
};

Vertex centroid_with(const Tree& tree, Vertex start, std::span<const std::uint8_t> blocked, Scratch& sc) {
    sc.order.clear();
    sc.order.push_back(start);
    sc.parent[start] = start;
    for (std::size_t i = 0; i < sc.order.size(); ++i) {
        const Vertex u = sc.order[i];
        for (Vertex w : tree.neighbors(u)) {
            if (w != sc.parent[u] && !blocked[w]) {
                sc.parent[w] = u;
                sc.order.push_back(w);
            }
        }
    }
    const auto total = static_cast<std::uint32_t>(sc.order.size());
    for (Vertex v : sc.order) {
        sc.size[v] = 1;
    }
    for (std::size_t i = sc.order.size(); i-- > 1;) {
        sc.size[sc.parent[sc.order[i]]] += sc.size[sc.order[i]];
    }
    Vertex best = kNoVertex;
    std::uint32_t best_piece = total + 1;
    for (Vertex v : sc.order) {
        std::uint32_t piece = total - sc.size[v];
        for (Vertex w : tree.neighbors(v)) {
            if (w != sc.parent[v] && !blocked[w]) {
                piece = std::max(piece, sc.size[w]);
            }
        }
        if (piece < best_piece || (piece == best_piece && v < best)) {
            best = v;
            best_piece = piece;
        }
    }
    return best;
}

Scratch make_scratch(std::size_t n) {
    return Scratch{{}, std::vector<Vertex>(n), std::vector<std::uint32_t>(n)};
}

}  // namespace

Vertex component_centroid(const Tree& tree, Vertex start, std::span<const std::uint8_t> blocked) {
    Scratch sc = make_scratch(tree.size());
    return centroid_with(tree, start, blocked, sc);
}

CentroidHierarchy::CentroidHierarchy(const Tree& tree)
    : parent_(tree.size(), kNoVertex), depth_(tree.size(), 0) {
    Scratch sc = make_scratch(tree.size());
    std::vector<std::uint8_t> blocked(tree.size(), 0);
    std::vector<std::pair<Vertex, Vertex>> work{{0, kNoVertex}};
    while (!work.empty()) {
        auto [start, up] = work.back();
        work.pop_back();
        const Vertex c = centroid_with(tree, start, blocked, sc);
        parent_[c] = up;
        depth_[c] = up == kNoVertex ? 0 : depth_[up] + 1;
        if (up == kNoVertex) {
            root_ = c;
        }
        blocked[c] = 1;
        for (Vertex w : tree.neighbors(c)) {
            if (!blocked[w]) {
                work.emplace_back(w, c);
            }
        }
    }
}

Vertex CentroidHierarchy::next(Vertex c, Vertex u) const {
    Vertex x = u;
    while (parent_[x] != c) {
        x = parent_[x];
        if (x == kNoVertex) {
            throw InvariantError("centroid hierarchy: answer leaves the feasible subtree");
        }
    }
    return x;
}

SearchTask<SearchOutcome> centroid_search_task(const CentroidHierarchy& hierarchy) {
    SearchOutcome out;
    out.algorithm = Algorithm::Centroid;
    Vertex c = hierarchy.root();
    for (;;) {
        OracleAnswer ans = co_yield c;
        ++out.total_queries;
        ++out.pre_phase_queries;
        if (ans.is_here()) {
            out.found = c;
            co_return out;
        }
        c = hierarchy.next(c, ans.neighbor());
    }
}

SearchOutcome centroid_search(const CentroidHierarchy& hierarchy, DirectionOracle& oracle) {
    auto task = centroid_search_task(hierarchy);
    while (task.advance()) {
        task.provide(oracle.query(task.pending_query()));
    }
    return task.result();
}

SearchOutcome centroid_search_reference(const Tree& tree, DirectionOracle& oracle) {
    SearchOutcome out;
    out.algorithm = Algorithm::Centroid;
    const std::size_t n = tree.size();
    Scratch sc = make_scratch(n);
    std::vector<std::uint8_t> outside(n, 0);  // 1 = not in the feasible subtree
    Vertex anywhere = 0;
    for (;;) {
        const Vertex c = centroid_with(tree, anywhere, outside, sc);
        OracleAnswer ans = oracle.query(c);
        ++out.total_queries;
        ++out.pre_phase_queries;
        if (ans.is_here()) {
            out.found = c;
            return out;
        }
        // New feasible subtree: the piece of F \ c holding the answer.
        std::vector<Vertex> feasible = sc.order;
        outside[c] = 1;
        std::vector<std::uint8_t> keep(n, 0);
        std::vector<Vertex> queue{ans.neighbor()};
        keep[ans.neighbor()] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            for (Vertex w : tree.neighbors(queue[i])) {
                if (!outside[w] && !keep[w]) {
                    keep[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        for (Vertex v : feasible) {
            if (!keep[v]) {
                outside[v] = 1;
            }
        }
        anywhere = ans.neighbor();
    }
}

}  // namespace treequest
