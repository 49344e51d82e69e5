#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "treequest/decomposition.hpp"

namespace treequest {

/*
 * Plain-text cache:
 *   treequest-decomposition v1
 *   tree <fingerprint hex> <n> <spine count>
 *   V <vertex> <spine> <position> <level>          one per vertex
 *   S <spine> <level> <parent|-1> <attachment|-1> <vertices...>
 */
void write_decomposition(std::ostream& out, const Tree& tree, const SpineDecomposition& decomp);

/// Throws InputError on any syntax, fingerprint or validity problem.
SpineDecomposition read_decomposition(std::istream& in, const Tree& tree);

std::filesystem::path cache_file_for(const Tree& tree, const std::filesystem::path& dir);

enum class CacheStatus { Hit, Miss, Rebuilt };

struct CachedDecomposition {
    SpineDecomposition decomposition;
    CacheStatus status = CacheStatus::Miss;
    std::string warning;  // set when a bad cache file was replaced
};

/// Reads the cache for `tree` under dir, or builds and writes it.
CachedDecomposition load_or_build_decomposition(const Tree& tree, const std::filesystem::path& dir);

}  // namespace treequest
