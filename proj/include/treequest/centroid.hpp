#pragma once

#include <span>
#include <vector>

#include "treequest/oracle.hpp"
#include "treequest/outcome.hpp"
#include "treequest/search_task.hpp"
#include "treequest/tree.hpp"

namespace treequest {

/// Vertex of the component around `start` (vertices with blocked[v] == 0) that
/// minimizes its largest residual piece; ties go to the smallest id.
Vertex component_centroid(const Tree& tree, Vertex start, std::span<const std::uint8_t> blocked);

/*
 * Centroid decomposition of the whole tree, precomputed once so each
 * centroid-search step costs O(log n) instead of O(|F|).
 */
class CentroidHierarchy {
public:
    explicit CentroidHierarchy(const Tree& tree);

    Vertex root() const { return root_; }
    Vertex parent(Vertex c) const { return parent_[c]; }
    std::uint32_t depth(Vertex c) const { return depth_[c]; }

    /// Centroid of the piece of F \ c that contains u, where F is c's piece.
    Vertex next(Vertex c, Vertex u) const;

private:
    Vertex root_ = 0;
    std::vector<Vertex> parent_;
    std::vector<std::uint32_t> depth_;
};

SearchTask<SearchOutcome> centroid_search_task(const CentroidHierarchy& hierarchy);
SearchOutcome centroid_search(const CentroidHierarchy& hierarchy, DirectionOracle& oracle);

/// Recomputes the centroid of the feasible subtree from scratch at each step.
SearchOutcome centroid_search_reference(const Tree& tree, DirectionOracle& oracle);

}  // namespace treequest
