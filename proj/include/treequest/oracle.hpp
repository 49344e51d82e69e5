#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "treequest/tree.hpp"

namespace treequest {

/// dir_t(v): either `here` or the neighbor of v on the path to the target.
class OracleAnswer {
public:
    OracleAnswer() = default;
    static OracleAnswer here() { return OracleAnswer(kNoVertex); }
    static OracleAnswer toward(Vertex u) { return OracleAnswer(u); }

    bool is_here() const { return neighbor_ == kNoVertex; }
    Vertex neighbor() const { return neighbor_; }

    friend bool operator==(OracleAnswer, OracleAnswer) = default;

private:
    explicit OracleAnswer(Vertex u) : neighbor_(u) {}
    Vertex neighbor_ = kNoVertex;
};

struct QueryRecord {
    Vertex vertex;
    OracleAnswer answer;
};

/*
 * Direction oracle for a hidden target. The only way search code learns
 * anything about the target; it exposes no accessor for it. Every query
 * costs exactly one unit of query_count.
 */
class DirectionOracle {
public:
    DirectionOracle(const TreeIndex& index, Vertex target);

    OracleAnswer query(Vertex v);

    std::uint64_t query_count() const { return count_; }

    void enable_log() { logging_ = true; }
    const std::vector<QueryRecord>& log() const { return log_; }
    /// One line per query: "v<TAB>here" or "v<TAB>u".
    void write_log(std::ostream& out) const;

    const Tree& tree() const { return index_->tree(); }

private:
    const TreeIndex* index_;
    Vertex target_;
    std::uint64_t count_ = 0;
    bool logging_ = false;
    std::vector<QueryRecord> log_;
};

enum class SpineDirection { Left, Right, OffSpine, Here };

struct SpineAnswer {
    SpineDirection kind;
    Vertex off_spine = kNoVertex;  // set for OffSpine
};

/// Classifies a raw answer at spine[position] relative to the spine order.
SpineAnswer interpret_on_spine(OracleAnswer raw, const PathInTree& spine, std::size_t position);

/// Queries v (which must lie on spine) and classifies the answer.
SpineAnswer on_spine_interpretation(DirectionOracle& oracle, Vertex v, const PathInTree& spine);

}  // namespace treequest
