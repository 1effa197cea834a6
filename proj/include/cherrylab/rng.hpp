#pragma once

#include <cstdint>

namespace cherrylab {

// splitmix64; portable across platforms, unlike the std distributions.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, k); k > 0
    std::uint64_t below(std::uint64_t k) {
        // rejection sampling keeps it unbiased
        std::uint64_t limit = k * (UINT64_MAX / k);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % k;
    }
};

}
