#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "treequest/centroid.hpp"
#include "treequest/decomposition.hpp"
#include "treequest/oracle.hpp"
#include "treequest/outcome.hpp"
#include "treequest/search_task.hpp"

namespace treequest {

void write_trace(std::ostream& out, const SearchOutcome& outcome);

// ---- path search ----

struct PathSearchResult {
    bool found = false;        // target is on the path at `vertex`
    Vertex vertex = kNoVertex; // target, or the exit vertex x
    Vertex off = kNoVertex;    // off-path answer at x
    std::uint64_t queries = 0;
};

/*
 * Doubling search along a path from position `start`: query the start, then
 * offsets 1, 2, 4, ... (clipped at the end of the path) in the indicated
 * direction until an answer turns back, then bisect the open gap.
 */
SearchTask<PathSearchResult> exponential_path_search_task(const PathInTree& path, std::size_t start);
PathSearchResult exponential_path_search(DirectionOracle& oracle, const PathInTree& path, std::size_t start);

// ---- strategies ----

SearchOutcome naive_trace(DirectionOracle& oracle, Vertex s);

SearchTask<SearchOutcome> kspine_search_task(const SpineDecomposition& decomp, Vertex s, CostModel model);
SearchOutcome kspine_search(const SpineDecomposition& decomp, DirectionOracle& oracle, Vertex s,
                            CostModel model = CostModel::Alg1);

/*
 * Queries s first. On a miss, climbs the components containing the answer
 * y* from the deepest one upward, and runs the spine search in the first
 * component whose outside is ruled out for the target.
 */
SearchTask<SearchOutcome> kspine_search_optimized_task(const TreeIndex& index, const SpineDecomposition& decomp,
                                                       Vertex s, CostModel model);
SearchOutcome kspine_search_optimized(const TreeIndex& index, const SpineDecomposition& decomp,
                                      DirectionOracle& oracle, Vertex s, CostModel model = CostModel::Alg1);

/// Centroid search and optimized k-spine search alternating queries on one oracle.
SearchOutcome robust_combined(const TreeIndex& index, const SpineDecomposition& decomp,
                              const CentroidHierarchy& centroids, DirectionOracle& oracle, Vertex s,
                              CostModel model = CostModel::Alg1);

/// Everything the strategies need about one tree, built once and shared read-only.
struct SearchIndex {
    explicit SearchIndex(const Tree& tree);
    SearchIndex(const Tree& tree, SpineDecomposition decomp);

    const Tree* tree;
    TreeIndex index;
    SpineDecomposition decomposition;
    CentroidHierarchy centroids;
};

SearchOutcome run_search(const SearchIndex& idx, Algorithm algorithm, DirectionOracle& oracle, Vertex s,
                         CostModel model = CostModel::Alg1);

}  // namespace treequest
