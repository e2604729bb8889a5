#pragma once

#include <cstdint>

namespace negcyc {

// splitmix64 (Steele/Lea/Flood); used only to expand seeds into state.
inline uint64_t splitmix64_next(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// xoshiro256** (Blackman/Vigna). Seedable, 64-bit output, identical stream
// on every platform. Stream k of a sampling run is seeded from
// seed ^ k, expanded through splitmix64, so reports do not depend on how
// many OS threads execute the streams.
class Xoshiro256ss {
public:
    explicit Xoshiro256ss(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64_next(sm);
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform draw from {0, ..., bound} by bitmask rejection (no modulo bias)
    uint64_t below_inclusive(uint64_t bound) {
        if (bound == 0) return 0;
        const int bits = 64 - __builtin_clzll(bound);
        const uint64_t mask = bits == 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1;
        while (true) {
            const uint64_t v = next() & mask;
            if (v <= bound) return v;
        }
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

}  // namespace negcyc
