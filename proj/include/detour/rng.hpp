#ifndef DETOUR_RNG_HPP
#define DETOUR_RNG_HPP

#include <cstdint>

namespace detour {

// Counter-based generator (splitmix64 over a seed/stream pair). Every
// (seed, stream) pair yields an independent, platform-stable sequence, so
// randomized runs can be replayed from the seed recorded in the output.
class CounterRng {
public:
    CounterRng(uint64_t seed, uint64_t stream)
        : state_(mix(seed ^ mix(stream ^ 0x9e3779b97f4a7c15ull))) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // Uniform integer in [0, bound), bound >= 1. Rejection sampling keeps the
    // distribution exact.
    int uniform_int(int bound) {
        const uint64_t b = static_cast<uint64_t>(bound);
        const uint64_t limit = UINT64_MAX - UINT64_MAX % b;
        uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return static_cast<int>(r % b);
    }

private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t state_;
};

} // namespace detour

#endif
