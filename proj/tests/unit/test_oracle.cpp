#include "doctest.h"

#include <sstream>

#include "oracles.hpp"
#include "treequest/oracle.hpp"
#include "treequest/random_tree.hpp"

using namespace treequest;
using namespace treequest::testing;

TEST_SUITE("oracle") {

TEST_CASE("answers on a path and a star") {
    const Tree p = path_tree(3);
    const TreeIndex pi(p);
    DirectionOracle o(pi, 2);
    CHECK(o.query(0) == OracleAnswer::toward(1));
    CHECK(o.query(2).is_here());
    CHECK(o.query_count() == 2);
    CHECK_THROWS_AS(o.query(3), std::out_of_range);

    const Tree s = star_tree(3);
    const TreeIndex si(s);
    DirectionOracle os(si, 3);
    CHECK(os.query(1) == OracleAnswer::toward(0));
}

TEST_CASE("following answers walks a shortest path") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Tree t = random_tree(12, seed);
        const TreeIndex idx(t);
        for (Vertex target = 0; target < t.size(); ++target) {
            for (Vertex start = 0; start < t.size(); ++start) {
                DirectionOracle o(idx, target);
                Vertex v = start;
                std::size_t steps = 0;
                for (OracleAnswer a = o.query(v); !a.is_here(); a = o.query(v)) {
                    REQUIRE(t.adjacent(v, a.neighbor()));
                    CHECK(a.neighbor() == direction_by_bfs(t, v, target));
                    v = a.neighbor();
                    ++steps;
                }
                CHECK(v == target);
                CHECK(steps == distance(t, start, target));
                CHECK(o.query_count() == steps + 1);
            }
        }
    }
}

TEST_CASE("spine interpretation") {
    // 3-4-5 spine inside 0-1-2-3-4-5-6-7 with leaf 8 on 5.
    std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}};
    const Tree t = Tree::from_edges(9, e);
    const TreeIndex idx(t);
    const PathInTree spine({3, 4, 5});
    DirectionOracle o(idx, 8);
    CHECK(on_spine_interpretation(o, 4, spine).kind == SpineDirection::Right);
    const SpineAnswer at5 = on_spine_interpretation(o, 5, spine);
    CHECK(at5.kind == SpineDirection::OffSpine);
    CHECK(at5.off_spine == 8);
    CHECK(on_spine_interpretation(o, 3, spine).kind == SpineDirection::Right);
    CHECK_THROWS_AS(on_spine_interpretation(o, 7, spine), std::invalid_argument);

    DirectionOracle here(idx, 4);
    CHECK(on_spine_interpretation(here, 4, spine).kind == SpineDirection::Here);
    CHECK(on_spine_interpretation(here, 5, spine).kind == SpineDirection::Left);
}

TEST_CASE("spine vertices point toward the projection") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Tree t = random_tree(20, seed + 7);
        const TreeIndex idx(t);
        const PathInTree spine = tree_path(t, 0, 19);
        for (Vertex target = 0; target < t.size(); ++target) {
            std::size_t x = 0;
            for (std::size_t i = 1; i < spine.size(); ++i) {
                if (distance(t, spine[i], target) < distance(t, spine[x], target)) {
                    x = i;
                }
            }
            DirectionOracle o(idx, target);
            for (std::size_t i = 0; i < spine.size(); ++i) {
                const auto kind = on_spine_interpretation(o, spine[i], spine).kind;
                if (i < x) {
                    CHECK(kind == SpineDirection::Right);
                } else if (i > x) {
                    CHECK(kind == SpineDirection::Left);
                } else {
                    CHECK((kind == SpineDirection::OffSpine || kind == SpineDirection::Here));
                }
            }
        }
    }
}

TEST_CASE("query log") {
    const Tree t = path_tree(4);
    const TreeIndex idx(t);
    DirectionOracle o(idx, 3);
    o.enable_log();
    o.query(0);
    o.query(3);
    REQUIRE(o.log().size() == 2);
    std::ostringstream out;
    o.write_log(out);
    CHECK(out.str() == "0\t1\n3\there\n");
}

}
