#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treequest/pathwidth.hpp"
#include "treequest/tree.hpp"

namespace treequest {

using SpineId = std::uint32_t;
inline constexpr SpineId kNoSpine = static_cast<SpineId>(-1);

struct Spine {
    SpineId id = 0;
    std::uint8_t level = 0;          // pathwidth of the component the spine was cut from
    SpineId parent = kNoSpine;
    Vertex attachment = kNoVertex;   // parent-spine vertex adjacent to the component
    Vertex entry = kNoVertex;        // component vertex adjacent to attachment
    std::uint32_t depth = 0;
    std::size_t component_size = 0;
    PathInTree path;
};

struct Placement {
    SpineId spine = kNoSpine;
    std::uint32_t position = 0;
    std::uint8_t level = 0;
};

/*
 * Vertex-disjoint spines covering the tree, arranged as a hierarchy of
 * components. Component c is the host of spine c: the connected piece left
 * after removing all spines of smaller depth that contains spine c.
 */
class SpineDecomposition {
public:
    std::size_t vertex_count() const { return placement_.size(); }
    std::size_t spine_count() const { return spines_.size(); }
    unsigned pathwidth() const { return spines_.front().level; }
    std::uint32_t max_depth() const;

    const std::vector<Spine>& spines() const { return spines_; }
    const Spine& spine(SpineId id) const { return spines_.at(id); }
    const Placement& placement(Vertex v) const { return placement_.at(v); }

    /// Is v a vertex of component comp? O(depth).
    bool contains(SpineId comp, Vertex v) const;

    /// Closest vertex of comp's spine to v. Throws std::invalid_argument if v is outside comp.
    Vertex anchor(Vertex v, SpineId comp) const;

    /// The child component of comp holding v (v in comp, off comp's spine).
    SpineId child_containing(SpineId comp, Vertex v) const;

    /// Tree edges (inside, outside) leaving component comp.
    std::vector<Edge> boundary(SpineId comp) const;

    friend bool operator==(const SpineDecomposition&, const SpineDecomposition&);

private:
    friend SpineDecomposition build_decomposition(const Tree&);
    friend SpineDecomposition assemble_decomposition(const Tree&, std::vector<Spine>);

    std::vector<Spine> spines_;
    std::vector<Placement> placement_;
};

/// A k-spine of the whole tree, k = pathwidth(tree).
PathInTree find_spine(const Tree& tree);

/// Residual components of tree minus path all have pathwidth < level.
bool verify_spine(const Tree& tree, const PathInTree& path, unsigned level);

/// Deterministic; every spine is certified against its residual components while building.
SpineDecomposition build_decomposition(const Tree& tree);

/*
 * Rebuilds derived fields (entry, depth, sizes, placements) from bare spine
 * records (id, level, parent, attachment, path). Throws InputError when the
 * records do not describe a partition of the tree.
 */
SpineDecomposition assemble_decomposition(const Tree& tree, std::vector<Spine> spines);

/// Independent validity check; returns human-readable violations (empty when valid).
std::vector<std::string> check_decomposition(const Tree& tree, const SpineDecomposition& decomp);

}  // namespace treequest
