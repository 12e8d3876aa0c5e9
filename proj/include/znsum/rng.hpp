#pragma once

#include <cstdint>
#include <vector>

namespace znsum {

/// splitmix64. Fixed constants, fixed algorithm: sampled campaigns must
/// reproduce bit-for-bit across platforms and worker partitionings, so no
/// std:: distribution (whose mapping is implementation-defined) appears
/// anywhere in the sampling path.
struct SplitMix64 {
    uint64_t state = 0;

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

/// Derives the substream seed for one trial from (campaign seed, trial index),
/// so a trial's instance is independent of how trials are split across workers.
inline uint64_t substream_seed(uint64_t seed, uint64_t index) {
    SplitMix64 g{seed ^ (0xA0761D6478BD642Full * (index + 1))};
    return g.next();
}

/// Uniform draw from [0, m), multiply-shift mapping. m must be nonzero.
inline uint64_t bounded(SplitMix64& g, uint64_t m) {
    return uint64_t((unsigned __int128)(g.next()) * m >> 64);
}

/// k distinct values from [0, pool), sorted. Floyd's sampling; no O(pool) state.
std::vector<uint32_t> sample_distinct(SplitMix64& g, uint32_t pool, uint32_t k);

}  // namespace znsum
