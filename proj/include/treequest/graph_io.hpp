#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treequest/tree.hpp"

namespace treequest {

enum class GraphFormat { Auto, EdgeList, MatrixMarket };

GraphFormat parse_graph_format(std::string_view name);
std::string_view to_string(GraphFormat format);

struct IngestStats {
    std::size_t data_lines = 0;
    std::size_t comment_lines = 0;
    std::size_t raw_edges = 0;
    std::size_t self_loops = 0;
    std::size_t duplicate_edges = 0;
};

/*
 * Undirected simple graph as read from disk. Vertex ids are dense 0-based;
 * labels[i] keeps the label the file used for vertex i. Edges are stored as
 * (min, max), sorted and unique.
 */
struct RawGraph {
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    GraphFormat format = GraphFormat::EdgeList;
    IngestStats stats;

    std::size_t vertex_count() const { return labels.size(); }
};

/*
 * Parses an edge list or a MatrixMarket coordinate file. Edge-list labels that
 * are all integers are densified in numeric order, otherwise in order of first
 * appearance. MatrixMarket ids are 1-based and map to id-1. Directed inputs
 * are symmetrized; self-loops and duplicate edges are dropped and counted.
 */
RawGraph load_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);
RawGraph load_graph_file(const std::filesystem::path& path, GraphFormat format = GraphFormat::Auto);

/// Induced subgraph on the largest connected component (ties: smallest contained id).
RawGraph largest_component(const RawGraph& graph);

/// Double-sweep BFS root: farthest vertices from a farthest vertex of 0,
/// minimum degree, smallest id.
Vertex peripheral_root(const RawGraph& graph);

/// Iterative DFS spanning tree visiting neighbors in ascending id order.
Tree dfs_spanning_tree(const RawGraph& graph, std::optional<Vertex> root = std::nullopt);

/// Reinterprets a graph that already is a tree; throws InputError otherwise.
Tree tree_from_graph(const RawGraph& graph);

RawGraph graph_from_tree(const Tree& tree);

void write_edge_list(std::ostream& out, const RawGraph& graph);
void write_edge_list(std::ostream& out, const Tree& tree);
void write_matrix_market(std::ostream& out, const RawGraph& graph);

}  // namespace treequest
