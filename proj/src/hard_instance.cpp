#include "treequest/hard_instance.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>

#include "treequest/parallel.hpp"
#include "treequest/rng.hpp"

namespace treequest {

namespace {

void emit_block(unsigned h, unsigned ell, std::uint64_t base, const std::vector<std::uint64_t>& size,
                std::vector<Edge>& edges) {
    if (h == 0) {
        return;
    }
    for (unsigned i = 1; i < ell; ++i) {
        edges.emplace_back(static_cast<Vertex>(base + i - 1), static_cast<Vertex>(base + i));
    }
    for (unsigned i = 1; i <= ell; ++i) {
        const std::uint64_t copy = base + ell + (i - 1) * size[h - 1];
        edges.emplace_back(static_cast<Vertex>(base + i - 1), static_cast<Vertex>(copy));
        emit_block(h - 1, ell, copy, size, edges);
    }
}

std::vector<std::uint64_t> block_sizes(unsigned k, unsigned ell) {
    std::vector<std::uint64_t> size(k + 1, 1);
    for (unsigned h = 1; h <= k; ++h) {
        size[h] = ell * (1 + size[h - 1]);
    }
    return size;
}

}  // namespace

std::uint64_t HardInstance::target_count() const {
    std::uint64_t n = 1;
    for (unsigned j = 0; j < k; ++j) {
        n *= index_count();
    }
    return n;
}

std::uint64_t hard_instance_size(unsigned k, unsigned ell) {
    return block_sizes(k, ell).back();
}

HardInstance build_hard_instance(unsigned k, unsigned ell) {
    if (k < 1 || ell < 4) {
        throw InputError("hard instance needs k >= 1 and l >= 4; got k=" + std::to_string(k) +
                         " l=" + std::to_string(ell));
    }
    HardInstance inst;
    inst.k = k;
    inst.ell = ell;
    inst.block_size = block_sizes(k, ell);
    const std::uint64_t n = inst.block_size.back();
    if (n > 0xffffffffULL / 2) {
        throw InputError("hard instance too large");
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    emit_block(k, ell, 0, inst.block_size, edges);
    inst.tree = Tree::from_edges(n, edges);
    return inst;
}

Vertex target_vertex(const HardInstance& inst, const TargetIndex& alpha) {
    if (alpha.size() != inst.k) {
        throw InputError("target index needs " + std::to_string(inst.k) + " entries");
    }
    std::uint64_t base = 0;
    for (unsigned j = 0; j < inst.k; ++j) {
        const unsigned i = alpha[j];
        if (i < inst.index_low() || i > inst.ell) {
            throw InputError("target index entry " + std::to_string(i) + " outside [" +
                             std::to_string(inst.index_low()) + ", " + std::to_string(inst.ell) + "]");
        }
        const unsigned h = inst.k - j;
        base += inst.ell + (i - 1) * inst.block_size[h - 1];
    }
    return static_cast<Vertex>(base);
}

TargetIndex decode_target(const HardInstance& inst, std::uint64_t index) {
    TargetIndex alpha(inst.k);
    for (unsigned j = inst.k; j-- > 0;) {
        alpha[j] = inst.index_low() + static_cast<unsigned>(index % inst.index_count());
        index /= inst.index_count();
    }
    return alpha;
}

std::uint64_t target_distance(const TargetIndex& alpha) {
    return std::accumulate(alpha.begin(), alpha.end(), std::uint64_t{0});
}

double distributional_floor(std::uint64_t target_count) {
    int log4 = 0;
    for (std::uint64_t x = target_count; x >= 4; x /= 4) {
        ++log4;
    }
    return 0.75 * (log4 - 2);
}

DistributionalResult distributional_experiment(const HardInstance& inst, const SearchIndex& idx, Algorithm algorithm,
                                               CostModel model, std::optional<std::size_t> sample,
                                               std::uint64_t seed, Execution exec) {
    std::vector<std::uint64_t> which;
    if (sample) {
        Rng rng(seed);
        which.resize(*sample);
        for (auto& w : which) {
            w = rng.below(inst.target_count());
        }
    } else {
        which.resize(inst.target_count());
        std::iota(which.begin(), which.end(), std::uint64_t{0});
    }

    DistributionalResult res;
    res.floor = distributional_floor(inst.target_count());
    res.queries.assign(which.size(), 0);
    std::atomic<bool> wrong{false};
    const auto count = static_cast<std::int64_t>(which.size());

    auto one = [&](std::int64_t i) {
        const Vertex t = target_vertex(inst, decode_target(inst, which[i]));
        DirectionOracle oracle(idx.index, t);
        SearchOutcome o = run_search(idx, algorithm, oracle, inst.root(), model);
        if (o.found != t) {
            wrong = true;
        }
        res.queries[i] = o.total_queries;
    };
    for_each_index(count, exec, 0, one);
    if (wrong) {
        throw InvariantError(to_string(algorithm) + " returned a wrong vertex on the hard instance");
    }
    const std::uint64_t total = std::accumulate(res.queries.begin(), res.queries.end(), std::uint64_t{0});
    res.mean = which.empty() ? 0.0 : static_cast<double>(total) / static_cast<double>(which.size());
    return res;
}

}  // namespace treequest
