#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "treequest/tree.hpp"

namespace treequest {

/*
 * Rooted pathwidth label. Entry i describes the tree R_i obtained from the
 * rooted tree by deleting the subtrees of the critical vertices of entries
 * 0..i-1: `level` is pw(R_i), and `critical` says R_i has a vertex with two
 * children whose subtrees have pathwidth `level` (that vertex is `vertex`).
 * Levels strictly decrease; every entry but the last is critical, and the
 * last is critical only when its critical vertex is the root.
 */
struct LabelEntry {
    std::uint8_t level = 0;
    bool critical = false;
    Vertex vertex = kNoVertex;

    friend bool operator==(const LabelEntry&, const LabelEntry&) = default;
};

using Label = std::vector<LabelEntry>;

/// Label of a root whose children carry the given labels.
Label combine_labels(Vertex root, std::vector<std::span<const LabelEntry>> children);

struct PathwidthResult {
    unsigned value = 0;
    Vertex root = 0;
    std::vector<Vertex> parent;                    // parent[root] == root
    std::vector<std::uint8_t> subtree_pathwidth;   // pw of the subtree entered by the edge parent[v] -> v
    Label root_label;
};

/// Exact pathwidth of a tree; O(n * pw) time, iterative.
PathwidthResult pathwidth(const Tree& tree, Vertex root = 0);

/*
 * Labels one connected component of the forest obtained by deleting the
 * vertices marked in `blocked`. Scratch storage is sized once for the host
 * tree and reused across components.
 */
class ComponentLabeler {
public:
    explicit ComponentLabeler(const Tree& tree);

    Label run(Vertex root, std::span<const std::uint8_t> blocked);

    Vertex parent(Vertex v) const { return parent_[v]; }
    std::uint8_t subtree_pathwidth(Vertex v) const { return subtree_pw_[v]; }
    /// Vertices of the last labeled component, in DFS preorder.
    std::span<const Vertex> component() const { return order_; }

private:
    const Tree* tree_;
    std::vector<Vertex> parent_;
    std::vector<std::uint8_t> subtree_pw_;
    std::vector<Vertex> order_;
};

}  // namespace treequest
