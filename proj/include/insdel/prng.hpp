#pragma once

#include <cstdint>

namespace insdel {

/// splitmix64. Used both as a standalone generator and to derive independent
/// per-trial seeds from (master seed, trial index) so that trial results do
/// not depend on how trials are scheduled across threads.
struct Prng {
    std::uint64_t state;

    explicit Prng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) via rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    int bit() { return static_cast<int>(next() >> 63); }
};

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    Prng g(master ^ (0xd1342543de82ef95ull * (index + 1)));
    return g.next();
}

}  // namespace insdel
