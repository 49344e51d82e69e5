#pragma once

#include <cstdint>
#include <random>

namespace treequest {

/// splitmix64 finalizer; derives independent seeds from (seed, salt).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/*
 * mt19937_64 with our own bounded draw. std::uniform_int_distribution is
 * implementation-defined, which would make generated trees differ between
 * standard libraries.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x = gen_();
        while (x >= limit) {
            x = gen_();
        }
        return x % bound;
    }

    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

private:
    std::mt19937_64 gen_;
};

}  // namespace treequest
