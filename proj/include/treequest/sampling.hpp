#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "treequest/tree.hpp"

namespace treequest {

struct PairSample {
    Vertex prediction = 0;
    Vertex target = 0;
    std::uint32_t d = 0;

    friend bool operator==(const PairSample&, const PairSample&) = default;
};

/*
 * Exact: uniform over all ordered pairs at distance d (needs a BFS from every
 * vertex). Approximate: uniform over pairs whose prediction is one of
 * `candidates` uniformly drawn sources with a non-empty distance-d sphere.
 */
enum class SamplerMode { Exact, Approximate };

std::string to_string(SamplerMode m);

/// Vertices at distance exactly d from source, in BFS order.
std::vector<Vertex> sphere(const Tree& tree, Vertex source, std::uint32_t d);

/// Throws InputError when no pair at distance d is found.
std::vector<PairSample> sample_pairs(const Tree& tree, std::uint32_t d, std::size_t count, std::uint64_t seed,
                                     SamplerMode mode, std::size_t candidates = 256);

/// FNV-1a over the (prediction, target) list; recorded so runs can prove they used the same pairs.
std::uint64_t pair_hash(std::span<const PairSample> pairs);

}  // namespace treequest
