#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "treequest/types.hpp"

namespace treequest {

/*
 * Immutable undirected tree on vertices 0..n-1 with ascending adjacency lists.
 * Construction validates connectivity, edge count and the absence of loops or
 * parallel edges.
 */
class Tree {
public:
    /// Single-vertex tree.
    Tree();

    static Tree from_edges(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t size() const { return offsets_.size() - 1; }
    bool contains(Vertex v) const { return v < size(); }
    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges as (min, max) pairs in ascending order.
    std::vector<Edge> edges() const;

    /// 64-bit FNV-1a digest of the edge set; keys decomposition caches.
    std::uint64_t fingerprint() const;

    void check_vertex(Vertex v) const;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
};

/// Ordered vertex sequence forming a simple path in a host tree.
class PathInTree {
public:
    PathInTree() = default;
    explicit PathInTree(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}

    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }
    Vertex front() const { return vertices_.front(); }
    Vertex back() const { return vertices_.back(); }
    std::span<const Vertex> vertices() const { return vertices_; }

    /// Linear scan; returns size() when v is not on the path.
    std::size_t position_of(Vertex v) const;

    /// Consecutive vertices adjacent in the tree and no repeats.
    bool is_valid_in(const Tree& tree) const;

    friend bool operator==(const PathInTree&, const PathInTree&) = default;

private:
    std::vector<Vertex> vertices_;
};

/// BFS distance between u and v.
std::size_t distance(const Tree& tree, Vertex u, Vertex v);

/// Distances from source to every vertex.
std::vector<std::uint32_t> bfs_distances(const Tree& tree, Vertex source);

/// The unique simple path from u to v.
PathInTree tree_path(const Tree& tree, Vertex u, Vertex v);

/*
 * Rooted view of a tree (root 0) supporting O(log deg) first-step lookup,
 * O(1) ancestor tests and O(log n) LCA through skew-binary jump pointers.
 * Memory is O(n) regardless of depth, which matters for DFS trees whose
 * depth is a constant fraction of n.
 */
class TreeIndex {
public:
    explicit TreeIndex(const Tree& tree);

    const Tree& tree() const { return *tree_; }
    Vertex parent(Vertex v) const { return parent_[v]; }
    std::uint32_t depth(Vertex v) const { return depth_[v]; }

    bool is_ancestor(Vertex a, Vertex v) const { return tin_[a] <= tin_[v] && tout_[v] <= tout_[a]; }

    /// First vertex after v on the v->t path; requires v != t.
    Vertex step_toward(Vertex v, Vertex t) const;

    Vertex lca(Vertex u, Vertex v) const;
    std::uint32_t distance(Vertex u, Vertex v) const;

    /// True iff x lies on b's side of the tree edge {a, b}.
    bool on_side(Vertex x, Vertex a, Vertex b) const;

private:
    const Tree* tree_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> jump_;
    std::vector<std::uint32_t> depth_;
    std::vector<std::uint32_t> tin_;
    std::vector<std::uint32_t> tout_;
    std::vector<std::size_t> child_offsets_;
    std::vector<Vertex> children_;  // per vertex, in ascending tin order
};

}  // namespace treequest
