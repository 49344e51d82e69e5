#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treequest/decomposition.hpp"

namespace treequest {

enum class Algorithm { Naive, Centroid, KSpine, KSpineOptimized, Robust };

/// Names used on the command line and in CSV output.
std::string to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(const std::string& name);
const std::vector<Algorithm>& all_algorithms();

/// Alg1 returns a singleton component without querying it; Confirming pays one query for it.
enum class CostModel { Alg1, Confirming };

std::string to_string(CostModel m);
std::optional<CostModel> parse_cost_model(const std::string& name);

struct SearchPhase {
    SpineId spine = kNoSpine;
    std::uint8_t level = 0;
    Vertex start = kNoVertex;   // s_cur when the phase began
    Vertex anchor = kNoVertex;  // projection of start onto the spine
    Vertex exit = kNoVertex;    // spine vertex where the search left the spine (or the target)
    std::uint64_t queries = 0;
};

struct SearchOutcome {
    Algorithm algorithm = Algorithm::Naive;
    Vertex found = kNoVertex;
    std::uint64_t total_queries = 0;
    std::uint64_t pre_phase_queries = 0;  // queries outside spine phases
    std::vector<SearchPhase> phases;
};

}  // namespace treequest
