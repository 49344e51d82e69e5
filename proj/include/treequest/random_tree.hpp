#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "treequest/rng.hpp"
#include "treequest/tree.hpp"

namespace treequest {

/// Decodes a Pruefer sequence over 0..n-1 (n = seq.size() + 2).
Tree tree_from_pruefer(std::size_t n, std::span<const Vertex> seq);

/// Uniform labeled tree on n vertices.
Tree random_tree(std::size_t n, std::uint64_t seed);

/// Calls fn for each of the n^(n-2) labeled trees on n >= 1 vertices.
void for_each_labeled_tree(std::size_t n, const std::function<void(const Tree&)>& fn);

/// Smallest n for which random_tree_with_pathwidth(n, k, .) exists.
std::size_t min_size_for_pathwidth(unsigned k);

/*
 * Random tree of pathwidth exactly k: a spine carrying three forced subtrees
 * of pathwidth k-1 (one on a pivot vertex, one on each side of it) plus
 * random smaller subtrees, built recursively and randomly relabeled.
 */
Tree random_tree_with_pathwidth(std::size_t n, unsigned k, std::uint64_t seed);

}  // namespace treequest
