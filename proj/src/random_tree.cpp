#include "treequest/random_tree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

namespace treequest {

namespace {

// Builds a pathwidth-h tree on `n` fresh ids starting at `base`; returns the
// number of ids used (always n).
class Grower {
public:
    Grower(Rng& rng, std::vector<Edge>& edges) : rng_(rng), edges_(edges) {}

    // Tree with vertices [base, base + n), pathwidth exactly h.
    void grow(unsigned h, Vertex base, std::size_t n) {
        if (h == 0) {
            return;  // n == 1
        }
        if (h == 1) {
            caterpillar(base, n);
            return;
        }
        const std::size_t sub = min_size_for_pathwidth(h - 1);
        std::size_t surplus = n - min_size_for_pathwidth(h);
        // Buckets: spine, pivot subtree, left subtree, right subtree, extras.
        std::size_t extra_len = 0;
        std::size_t forced[3] = {sub, sub, sub};
        std::size_t extras = 0;
        for (; surplus > 0; --surplus) {
            switch (rng_.below(5)) {
                case 0: ++extra_len; break;
                case 1: ++forced[0]; break;
                case 2: ++forced[1]; break;
                case 3: ++forced[2]; break;
                default: ++extras; break;
            }
        }
        const std::size_t len = 3 + extra_len;
        for (std::size_t i = 1; i < len; ++i) {
            link(base + i - 1, base + i);
        }
        Vertex next = static_cast<Vertex>(base + len);
        const std::size_t pivot = rng_.between(1, len - 2);
        const std::size_t spot[3] = {pivot, rng_.between(0, pivot - 1), rng_.between(pivot + 1, len - 1)};
        for (int j = 0; j < 3; ++j) {
            next = hang(base + spot[j], h - 1, next, forced[j]);
        }
        while (extras > 0) {
            const std::size_t size = rng_.between(1, extras);
            unsigned top = 0;
            while (top + 1 < h && min_size_for_pathwidth(top + 1) <= size) {
                ++top;
            }
            unsigned level = static_cast<unsigned>(rng_.between(top == 0 ? 0 : 1, top));
            next = hang(base + rng_.below(len), level, next, size);
            extras -= size;
        }
    }

private:
    void link(std::size_t a, std::size_t b) { edges_.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b)); }

    Vertex hang(std::size_t at, unsigned level, Vertex base, std::size_t size) {
        grow(level, base, size);
        link(at, base + rng_.below(size));
        return static_cast<Vertex>(base + size);
    }

    void caterpillar(Vertex base, std::size_t n) {
        const std::size_t len = rng_.between(1, n);
        for (std::size_t i = 1; i < len; ++i) {
            link(base + i - 1, base + i);
        }
        for (std::size_t i = len; i < n; ++i) {
            link(base + rng_.below(len), base + i);
        }
    }

    Rng& rng_;
    std::vector<Edge>& edges_;
};

}  // namespace

Tree tree_from_pruefer(std::size_t n, std::span<const Vertex> seq) {
    if (n == 0 || (n >= 2 && seq.size() != n - 2) || (n < 2 && !seq.empty())) {
        throw InputError("pruefer sequence length must be n - 2");
    }
    if (n == 1) {
        return Tree();
    }
    std::vector<std::uint32_t> degree(n, 1);
    for (Vertex v : seq) {
        if (v >= n) {
            throw InputError("pruefer entry out of range");
        }
        ++degree[v];
    }
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v) {
        if (degree[v] == 1) {
            leaves.push(v);
        }
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (Vertex v : seq) {
        const Vertex leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1) {
            leaves.push(v);
        }
    }
    const Vertex a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return Tree::from_edges(n, edges);
}

Tree random_tree(std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw InputError("random tree needs at least one vertex");
    }
    Rng rng(seed);
    std::vector<Vertex> seq(n >= 2 ? n - 2 : 0);
    for (auto& v : seq) {
        v = static_cast<Vertex>(rng.below(n));
    }
    return tree_from_pruefer(n, seq);
}

void for_each_labeled_tree(std::size_t n, const std::function<void(const Tree&)>& fn) {
    if (n <= 2) {
        fn(tree_from_pruefer(std::max<std::size_t>(n, 1), {}));
        return;
    }
    std::vector<Vertex> seq(n - 2, 0);
    for (;;) {
        fn(tree_from_pruefer(n, seq));
        std::size_t i = 0;
        while (i < seq.size() && ++seq[i] == n) {
            seq[i++] = 0;
        }
        if (i == seq.size()) {
            return;
        }
    }
}

std::size_t min_size_for_pathwidth(unsigned k) {
    if (k == 0) {
        return 1;
    }
    if (k == 1) {
        return 2;
    }
    return 3 + 3 * min_size_for_pathwidth(k - 1);
}

Tree random_tree_with_pathwidth(std::size_t n, unsigned k, std::uint64_t seed) {
    if (n < min_size_for_pathwidth(k) || (k == 0 && n != 1)) {
        throw InputError("no tree of pathwidth " + std::to_string(k) + " on " + std::to_string(n) + " vertices");
    }
    Rng rng(seed);
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    Grower(rng, edges).grow(k, 0, n);

    std::vector<Vertex> relabel(n);
    std::iota(relabel.begin(), relabel.end(), Vertex{0});
    for (std::size_t i = n; i > 1; --i) {
        std::swap(relabel[i - 1], relabel[rng.below(i)]);
    }
    for (auto& [a, b] : edges) {
        a = relabel[a];
        b = relabel[b];
    }
    return Tree::from_edges(n, edges);
}

}  // namespace treequest
