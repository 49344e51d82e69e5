#include "treequest/oracle.hpp"

#include <ostream>

namespace treequest {

DirectionOracle::DirectionOracle(const TreeIndex& index, Vertex target) : index_(&index), target_(target) {
    index.tree().check_vertex(target);
}

OracleAnswer DirectionOracle::query(Vertex v) {
    index_->tree().check_vertex(v);
    ++count_;
    OracleAnswer answer = v == target_ ? OracleAnswer::here() : OracleAnswer::toward(index_->step_toward(v, target_));
    if (logging_) {
        log_.push_back({v, answer});
    }
    return answer;
}

void DirectionOracle::write_log(std::ostream& out) const {
    for (const auto& rec : log_) {
        out << rec.vertex << '\t';
        if (rec.answer.is_here()) {
            out << "here";
        } else {
            out << rec.answer.neighbor();
        }
        out << '\n';
    }
}

SpineAnswer interpret_on_spine(OracleAnswer raw, const PathInTree& spine, std::size_t position) {
    if (raw.is_here()) {
        return {SpineDirection::Here};
    }
    Vertex u = raw.neighbor();
    if (position > 0 && spine[position - 1] == u) {
        return {SpineDirection::Left};
    }
    if (position + 1 < spine.size() && spine[position + 1] == u) {
        return {SpineDirection::Right};
    }
    return {SpineDirection::OffSpine, u};
}

SpineAnswer on_spine_interpretation(DirectionOracle& oracle, Vertex v, const PathInTree& spine) {
    std::size_t pos = spine.position_of(v);
    if (pos == spine.size()) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " is not on the spine");
    }
    return interpret_on_spine(oracle.query(v), spine, pos);
}

}  // namespace treequest
