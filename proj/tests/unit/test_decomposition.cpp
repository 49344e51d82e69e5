#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "treequest/decomposition.hpp"
#include "treequest/decomposition_cache.hpp"
#include "treequest/hard_instance.hpp"
#include "treequest/random_tree.hpp"

using namespace treequest;
using namespace treequest::testing;

namespace {

// Closest spine vertex by brute force distances.
Vertex closest_on(const Tree& t, const PathInTree& path, Vertex v) {
    const auto dist = bfs_distances(t, v);
    Vertex best = path[0];
    for (Vertex p : path.vertices()) {
        if (dist[p] < dist[best]) {
            best = p;
        }
    }
    return best;
}

}  // namespace

TEST_SUITE("decomposition") {

TEST_CASE("single vertex and path") {
    const SpineDecomposition one = build_decomposition(Tree());
    REQUIRE(one.spine_count() == 1);
    CHECK(one.spine(0).level == 0);
    CHECK(one.spine(0).path.size() == 1);

    const Tree p = path_tree(8);
    const SpineDecomposition d = build_decomposition(p);
    REQUIRE(d.spine_count() == 1);
    CHECK(d.spine(0).level == 1);
    CHECK(d.spine(0).path.size() == 8);
    CHECK(find_spine(p).size() == 8);
}

TEST_CASE("caterpillar spine leaves singletons") {
    const Tree t = caterpillar_tree(5, 1);
    const PathInTree s = find_spine(t);
    CHECK(verify_spine(t, s, 1));
    for (const auto& comp : components_without(t, s.vertices())) {
        CHECK(comp.size() == 1);
    }
    const SpineDecomposition d = build_decomposition(t);
    for (Vertex leaf = 5; leaf < 10; ++leaf) {
        if (d.placement(leaf).spine != 0) {
            CHECK(d.anchor(leaf, 0) == leaf - 5);
        }
    }
}

TEST_CASE("spine of a small lower-bound tree") {
    const HardInstance inst = build_hard_instance(2, 4);
    const PathInTree s = find_spine(inst.tree);
    CHECK(verify_spine(inst.tree, s, 2));
    for (const auto& comp : components_without(inst.tree, s.vertices())) {
        CHECK(pathwidth(induced_subtree(inst.tree, comp)).value <= 1);
    }
    const SpineDecomposition d = build_decomposition(inst.tree);
    CHECK(check_decomposition(inst.tree, d).empty());
    // Bottom vertex under the third top path vertex projects to it.
    const Vertex p3 = 2;
    const Vertex bottom = target_vertex(inst, {3, 2});
    const Vertex a = d.anchor(bottom, 0);
    CHECK(a == closest_on(inst.tree, d.spine(0).path, bottom));
    if (d.spine(0).path.position_of(p3) < d.spine(0).path.size()) {
        CHECK(a == p3);
    }
}

TEST_CASE("verify_spine rejects a bad path") {
    // legs 1-2-3-4, 5-6-7-8, 9-10-11-12 around center 0
    const Tree t = spider_tree(3, 4);
    CHECK_FALSE(verify_spine(t, PathInTree({3, 4}), 2));  // leaves a three-legged spider
    CHECK_FALSE(verify_spine(t, PathInTree({1, 5}), 2));  // not a path
    CHECK(verify_spine(t, PathInTree({0}), 2));
    CHECK(verify_spine(t, PathInTree({2, 1, 0, 5}), 2));
    CHECK(verify_spine(t, find_spine(t), 2));
}

TEST_CASE("hierarchy of a three-level lower-bound tree") {
    const HardInstance inst = build_hard_instance(3, 5);
    const SpineDecomposition d = build_decomposition(inst.tree);
    CHECK(check_decomposition(inst.tree, d).empty());
    CHECK(d.pathwidth() == 3);
    CHECK(d.max_depth() == 3);
    // The top path must lie inside the root spine.
    for (Vertex p = 0; p < 5; ++p) {
        CHECK(d.placement(p).spine == 0);
    }
}

TEST_CASE("random trees decompose validly with exact anchors") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Tree t = seed % 2 ? random_tree(80, seed) : random_tree_with_pathwidth(120, 3, seed);
        const SpineDecomposition d = build_decomposition(t);
        const auto problems = check_decomposition(t, d);
        CHECK_MESSAGE(problems.empty(), (problems.empty() ? "" : problems.front()));
        CHECK(d.pathwidth() == pathwidth(t).value);
        CHECK(d.max_depth() <= d.pathwidth());
        for (Vertex v = 0; v < t.size(); v += 3) {
            for (SpineId c = d.placement(v).spine; c != kNoSpine; c = d.spine(c).parent) {
                CHECK(d.contains(c, v));
                CHECK(d.anchor(v, c) == closest_on(t, d.spine(c).path, v));
            }
        }
    }
}

TEST_CASE("components are subtrees with no larger width") {
    const Tree t = random_tree(200, 42);
    const SpineDecomposition d = build_decomposition(t);
    const unsigned k = d.pathwidth();
    for (const Spine& s : d.spines()) {
        CHECK(s.level <= k);
        if (s.parent != kNoSpine) {
            CHECK_THROWS_AS(d.anchor(d.spine(s.parent).path[0], s.id), std::invalid_argument);
        }
    }
}

TEST_CASE("boundary edges leave the component") {
    const Tree t = random_tree_with_pathwidth(300, 4, 3);
    const SpineDecomposition d = build_decomposition(t);
    for (const Spine& s : d.spines()) {
        std::size_t leaving = 0;
        for (Vertex v = 0; v < t.size(); ++v) {
            if (!d.contains(s.id, v)) {
                continue;
            }
            for (Vertex w : t.neighbors(v)) {
                leaving += d.contains(s.id, w) ? 0 : 1;
            }
        }
        const auto b = d.boundary(s.id);
        CHECK(b.size() == leaving);
        for (auto [in, out] : b) {
            CHECK(d.contains(s.id, in));
            CHECK_FALSE(d.contains(s.id, out));
            CHECK(t.adjacent(in, out));
        }
    }
}

TEST_CASE("checker catches a damaged decomposition") {
    const Tree t = random_tree(50, 8);
    const SpineDecomposition d = build_decomposition(t);
    std::vector<Spine> spines = d.spines();
    if (spines.size() >= 2) {
        // Claim the second spine sits at the root level.
        spines[1].level = spines[0].level;
        const SpineDecomposition bad = assemble_decomposition(t, spines);
        CHECK_FALSE(check_decomposition(t, bad).empty());
    }
}

TEST_CASE("deterministic build and cache round trip") {
    const Tree t = random_tree_with_pathwidth(500, 4, 17);
    const SpineDecomposition a = build_decomposition(t);
    const SpineDecomposition b = build_decomposition(t);
    CHECK(a == b);
    std::ostringstream out;
    write_decomposition(out, t, a);
    std::istringstream in(out.str());
    CHECK(read_decomposition(in, t) == a);

    std::ostringstream again;
    write_decomposition(again, t, b);
    CHECK(again.str() == out.str());

    std::istringstream wrong_tree(out.str());
    CHECK_THROWS_AS(read_decomposition(wrong_tree, random_tree(500, 1)), InputError);
}

TEST_CASE("corrupted cache is rebuilt") {
    const auto dir = std::filesystem::temp_directory_path() / "treequest_cache_test";
    std::filesystem::remove_all(dir);
    const Tree t = random_tree(120, 4);

    auto first = load_or_build_decomposition(t, dir);
    CHECK(first.status == CacheStatus::Miss);
    auto second = load_or_build_decomposition(t, dir);
    CHECK(second.status == CacheStatus::Hit);
    CHECK(second.decomposition == first.decomposition);

    const auto file = cache_file_for(t, dir);
    std::string text;
    {
        std::ifstream in(file);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    // Break the tag of the last spine record.
    const auto pos = text.rfind("\nS ");
    REQUIRE(pos != std::string::npos);
    text.replace(pos + 1, 1, "X");
    {
        std::ofstream o(file);
        o << text;
    }
    auto third = load_or_build_decomposition(t, dir);
    CHECK(third.status == CacheStatus::Rebuilt);
    CHECK_FALSE(third.warning.empty());
    CHECK(third.decomposition == first.decomposition);
    CHECK(load_or_build_decomposition(t, dir).status == CacheStatus::Hit);
    std::filesystem::remove_all(dir);
}

}
