#include "treequest/tree.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace treequest {

Tree::Tree() : offsets_{0, 0} {}

Tree Tree::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    if (vertex_count == 0) {
        throw InputError("tree must have at least one vertex");
    }
    if (vertex_count > static_cast<std::size_t>(kNoVertex)) {
        throw InputError("too many vertices");
    }
    if (edges.size() != vertex_count - 1) {
        throw InputError("input is not a tree: " + std::to_string(vertex_count) + " vertices but " +
                         std::to_string(edges.size()) + " edges");
    }

    Tree t;
    t.offsets_.assign(vertex_count + 1, 0);
    for (const auto& [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) {
            throw InputError("edge endpoint out of range");
        }
        if (u == v) {
            throw InputError("input is not a tree: self-loop at " + std::to_string(u));
        }
        ++t.offsets_[u + 1];
        ++t.offsets_[v + 1];
    }
    for (std::size_t i = 0; i < vertex_count; ++i) {
        t.offsets_[i + 1] += t.offsets_[i];
    }
    t.adjacency_.resize(t.offsets_.back());
    std::vector<std::size_t> fill(t.offsets_.begin(), t.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        t.adjacency_[fill[u]++] = v;
        t.adjacency_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        auto first = t.adjacency_.begin() + static_cast<std::ptrdiff_t>(t.offsets_[v]);
        auto last = t.adjacency_.begin() + static_cast<std::ptrdiff_t>(t.offsets_[v + 1]);
        std::sort(first, last);
        if (std::adjacent_find(first, last) != last) {
            throw InputError("input is not a tree: parallel edges at " + std::to_string(v));
        }
    }

    // n-1 edges plus connectivity implies acyclic.
    std::vector<char> seen(vertex_count, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : t.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != vertex_count) {
        throw InputError("input is not a tree: graph is disconnected");
    }
    return t;
}

std::span<const Vertex> Tree::neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Tree::adjacent(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Tree::edges() const {
    std::vector<Edge> out;
    out.reserve(size() - 1);
    for (Vertex u = 0; u < size(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

std::uint64_t Tree::fingerprint() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xffU;
            h *= 1099511628211ULL;
        }
    };
    mix(size());
    for (Vertex u = 0; u < size(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) {
                mix((static_cast<std::uint64_t>(u) << 32) | v);
            }
        }
    }
    return h;
}

void Tree::check_vertex(Vertex v) const {
    if (!contains(v)) {
        throw std::out_of_range("invalid vertex id " + std::to_string(v) + " (tree has " +
                                std::to_string(size()) + " vertices)");
    }
}

std::size_t PathInTree::position_of(Vertex v) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    return static_cast<std::size_t>(it - vertices_.begin());
}

bool PathInTree::is_valid_in(const Tree& tree) const {
    if (vertices_.empty()) {
        return false;
    }
    std::vector<Vertex> sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return false;
    }
    for (Vertex v : vertices_) {
        if (!tree.contains(v)) {
            return false;
        }
    }
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        if (!tree.adjacent(vertices_[i - 1], vertices_[i])) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> bfs_distances(const Tree& tree, Vertex source) {
    tree.check_vertex(source);
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> dist(tree.size(), unset);
    std::vector<Vertex> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        for (Vertex w : tree.neighbors(v)) {
            if (dist[w] == unset) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::size_t distance(const Tree& tree, Vertex u, Vertex v) {
    tree.check_vertex(v);
    return bfs_distances(tree, u)[v];
}

PathInTree tree_path(const Tree& tree, Vertex u, Vertex v) {
    tree.check_vertex(u);
    tree.check_vertex(v);
    std::vector<Vertex> parent(tree.size(), kNoVertex);
    std::vector<Vertex> queue{v};
    parent[v] = v;
    for (std::size_t head = 0; head < queue.size() && parent[u] == kNoVertex; ++head) {
        Vertex x = queue[head];
        for (Vertex w : tree.neighbors(x)) {
            if (parent[w] == kNoVertex) {
                parent[w] = x;
                queue.push_back(w);
            }
        }
    }
    std::vector<Vertex> path{u};
    while (path.back() != v) {
        path.push_back(parent[path.back()]);
    }
    return PathInTree(std::move(path));
}

TreeIndex::TreeIndex(const Tree& tree)
    : tree_(&tree),
      parent_(tree.size(), kNoVertex),
      jump_(tree.size(), 0),
      depth_(tree.size(), 0),
      tin_(tree.size(), 0),
      tout_(tree.size(), 0),
      child_offsets_(tree.size() + 1, 0) {
    const std::size_t n = tree.size();
    children_.reserve(n - 1);

    // Iterative DFS from 0; children are recorded in the order they are entered,
    // which is ascending tin.
    struct Frame {
        Vertex v;
        std::size_t next;
    };
    std::vector<Frame> stack;
    std::uint32_t clock = 0;
    parent_[0] = 0;
    jump_[0] = 0;
    tin_[0] = clock++;
    stack.push_back({0, 0});

    std::vector<std::size_t> child_count(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        child_count[v] = tree.degree(v) - (v == 0 ? 0 : 1);
    }
    for (std::size_t v = 0; v < n; ++v) {
        child_offsets_[v + 1] = child_offsets_[v] + child_count[v];
    }
    children_.assign(child_offsets_.back(), 0);
    std::vector<std::size_t> fill(child_offsets_.begin(), child_offsets_.end() - 1);

    while (!stack.empty()) {
        Frame& f = stack.back();
        auto nb = tree.neighbors(f.v);
        if (f.next < nb.size()) {
            Vertex w = nb[f.next++];
            if (w == parent_[f.v] && f.v != 0) {
                continue;
            }
            Vertex p = f.v;
            parent_[w] = p;
            depth_[w] = depth_[p] + 1;
            Vertex jp = jump_[p];
            jump_[w] = (depth_[p] - depth_[jp] == depth_[jp] - depth_[jump_[jp]]) ? jump_[jp] : p;
            tin_[w] = clock++;
            children_[fill[p]++] = w;
            stack.push_back({w, 0});
        } else {
            tout_[f.v] = clock;
            stack.pop_back();
        }
    }
}

Vertex TreeIndex::step_toward(Vertex v, Vertex t) const {
    if (is_ancestor(v, t)) {
        auto first = children_.begin() + static_cast<std::ptrdiff_t>(child_offsets_[v]);
        auto last = children_.begin() + static_cast<std::ptrdiff_t>(child_offsets_[v + 1]);
        // Last child whose tin does not exceed tin[t].
        auto it = std::upper_bound(first, last, tin_[t],
                                   [this](std::uint32_t key, Vertex c) { return key < tin_[c]; });
        return *(it - 1);
    }
    return parent_[v];
}

Vertex TreeIndex::lca(Vertex u, Vertex v) const {
    if (is_ancestor(u, v)) {
        return u;
    }
    if (is_ancestor(v, u)) {
        return v;
    }
    while (!is_ancestor(parent_[u], v)) {
        u = is_ancestor(jump_[u], v) ? parent_[u] : jump_[u];
    }
    return parent_[u];
}

std::uint32_t TreeIndex::distance(Vertex u, Vertex v) const {
    return depth_[u] + depth_[v] - 2 * depth_[lca(u, v)];
}

bool TreeIndex::on_side(Vertex x, Vertex a, Vertex b) const {
    if (parent_[b] == a && b != 0) {
        return is_ancestor(b, x);
    }
    return !is_ancestor(a, x);
}

}  // namespace treequest
