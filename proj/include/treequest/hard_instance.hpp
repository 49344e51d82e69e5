#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treequest/search.hpp"
#include "treequest/tree.hpp"

namespace treequest {

/*
 * Recursive lower-bound tree T_{k,l}: a path p_1..p_l with a copy of
 * T_{k-1,l} hanging from every p_i by an edge to the copy's root; T_0 is a
 * single vertex. Numbering is preorder: the l path vertices of a block come
 * first, then the l copies in index order. Vertex 0 is the root p_1.
 */
struct HardInstance {
    unsigned k = 0;
    unsigned ell = 0;
    Tree tree;
    std::vector<std::uint64_t> block_size;  // block_size[h] = |T_h|

    Vertex root() const { return 0; }
    unsigned index_low() const { return (ell + 1) / 2; }
    unsigned index_count() const { return ell - index_low() + 1; }
    std::uint64_t target_count() const;
    // the distance bounds and the query floor are only claimed when l >= k^2
    bool in_bound_regime() const { return ell >= k * k; }
};

std::uint64_t hard_instance_size(unsigned k, unsigned ell);

/// Throws InputError unless k >= 1 and ell >= 4.
HardInstance build_hard_instance(unsigned k, unsigned ell);

/// alpha = (i_k, ..., i_1), each in [ceil(l/2), l].
using TargetIndex = std::vector<unsigned>;

Vertex target_vertex(const HardInstance& inst, const TargetIndex& alpha);

/// The index-th alpha in lexicographic order, index < target_count().
TargetIndex decode_target(const HardInstance& inst, std::uint64_t index);

/// Sum of the alpha entries: the distance from the root to target_vertex(alpha).
std::uint64_t target_distance(const TargetIndex& alpha);

/// 0.75 * (floor(log4 N) - 2).
double distributional_floor(std::uint64_t target_count);

struct DistributionalResult {
    double mean = 0.0;
    double floor = 0.0;
    std::vector<std::uint64_t> queries;  // per target, in decode order
};

/*
 * Runs one strategy from the root against every target (or `sample` of them
 * drawn with `seed`). A wrong answer throws InvariantError.
 */
DistributionalResult distributional_experiment(const HardInstance& inst, const SearchIndex& idx, Algorithm algorithm,
                                               CostModel model = CostModel::Alg1,
                                               std::optional<std::size_t> sample = std::nullopt,
                                               std::uint64_t seed = 1, Execution exec = Execution::Parallel);

}  // namespace treequest
