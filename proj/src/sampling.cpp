#include "treequest/sampling.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "treequest/rng.hpp"

namespace treequest {

namespace {

// Depth-limited BFS with a reusable visit stamp.
class SphereWalker {
public:
    explicit SphereWalker(const Tree& tree) : tree_(&tree), stamp_(tree.size(), 0) {}

    const std::vector<Vertex>& run(Vertex source, std::uint32_t d) {
        ++epoch_;
        frontier_.assign(1, source);
        stamp_[source] = epoch_;
        for (std::uint32_t depth = 0; depth < d && !frontier_.empty(); ++depth) {
            next_.clear();
            for (Vertex u : frontier_) {
                for (Vertex w : tree_->neighbors(u)) {
                    if (stamp_[w] != epoch_) {
                        stamp_[w] = epoch_;
                        next_.push_back(w);
                    }
                }
            }
            frontier_.swap(next_);
        }
        return frontier_;
    }

private:
    const Tree* tree_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::vector<Vertex> frontier_;
    std::vector<Vertex> next_;
};

// Draws `count` pairs: source index by weight, then a uniform rank in its sphere.
std::vector<PairSample> draw(const Tree& tree, std::span<const Vertex> sources,
                             std::span<const std::uint64_t> weights, std::uint32_t d, std::size_t count, Rng& rng) {
    std::vector<std::uint64_t> prefix(weights.size());
    std::partial_sum(weights.begin(), weights.end(), prefix.begin());
    const std::uint64_t total = prefix.empty() ? 0 : prefix.back();
    if (total == 0) {
        throw InputError("no pair at distance " + std::to_string(d));
    }
    std::vector<std::pair<std::size_t, std::uint64_t>> picks(count);
    for (auto& [src, rank] : picks) {
        const std::uint64_t r = rng.below(total);
        src = static_cast<std::size_t>(std::upper_bound(prefix.begin(), prefix.end(), r) - prefix.begin());
        rank = rng.below(weights[src]);
    }
    // One BFS per distinct source; output keeps draw order.
    std::map<std::size_t, std::vector<std::size_t>> by_source;
    for (std::size_t i = 0; i < count; ++i) {
        by_source[picks[i].first].push_back(i);
    }
    std::vector<PairSample> out(count);
    SphereWalker walker(tree);
    for (const auto& [src, members] : by_source) {
        const auto& ring = walker.run(sources[src], d);
        for (std::size_t i : members) {
            out[i] = {sources[src], ring[picks[i].second], d};
        }
    }
    return out;
}

}  // namespace

std::string to_string(SamplerMode m) {
    return m == SamplerMode::Exact ? "exact" : "approximate";
}

std::vector<Vertex> sphere(const Tree& tree, Vertex source, std::uint32_t d) {
    tree.check_vertex(source);
    SphereWalker walker(tree);
    return walker.run(source, d);
}

std::vector<PairSample> sample_pairs(const Tree& tree, std::uint32_t d, std::size_t count, std::uint64_t seed,
                                     SamplerMode mode, std::size_t candidates) {
    if (d == 0) {
        throw InputError("pair distance must be at least 1");
    }
    Rng rng(seed);
    SphereWalker walker(tree);
    std::vector<Vertex> sources;
    std::vector<std::uint64_t> weights;
    if (mode == SamplerMode::Exact) {
        sources.resize(tree.size());
        weights.resize(tree.size());
        for (Vertex v = 0; v < tree.size(); ++v) {
            sources[v] = v;
            weights[v] = walker.run(v, d).size();
        }
    } else {
        // Resample sources whose sphere is empty; give up after a bounded number of tries.
        const std::size_t max_tries = 64 * std::max<std::size_t>(candidates, 1);
        std::size_t tries = 0;
        while (sources.size() < candidates && tries < max_tries) {
            ++tries;
            const auto v = static_cast<Vertex>(rng.below(tree.size()));
            const std::size_t w = walker.run(v, d).size();
            if (w > 0) {
                sources.push_back(v);
                weights.push_back(w);
            }
        }
    }
    return draw(tree, sources, weights, d, count, rng);
}

std::uint64_t pair_hash(std::span<const PairSample> pairs) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::uint32_t x) {
        for (int b = 0; b < 4; ++b) {
            h ^= (x >> (8 * b)) & 0xffu;
            h *= 0x100000001b3ULL;
        }
    };
    for (const auto& p : pairs) {
        mix(p.prediction);
        mix(p.target);
    }
    return h;
}

}  // namespace treequest
