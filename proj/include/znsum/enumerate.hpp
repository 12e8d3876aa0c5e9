#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "znsum/zn.hpp"

namespace znsum {

/// Saturation value for binomial arithmetic; anything at or above this is
/// "too many to enumerate" and only ever compared against budgets.
inline constexpr uint64_t kBinomCap = uint64_t(4) * 1000 * 1000 * 1000 * 1000 * 1000 * 1000;

/// C(n, k), saturating at kBinomCap instead of overflowing.
uint64_t binomial_capped(uint64_t n, uint64_t k);

/// Combinations are ordered colexicographically: c is identified with the
/// strictly increasing index tuple c_1 < ... < c_k and ranked by
/// sum of C(c_i, i). Disjoint rank ranges partition the space exactly.
uint64_t colex_rank(std::span<const uint32_t> c);

/// Inverse of colex_rank. rank must be < C(pool, k).
std::vector<uint32_t> colex_unrank(uint64_t rank, uint32_t k, uint32_t pool);

/// Advances c to its colex successor among k-combinations of [0, pool).
/// Returns false when c was the last combination.
bool colex_next(std::vector<uint32_t>& c, uint32_t pool);

/// Streams the combinations of pool's elements of the given size whose colex
/// rank lies in [lo, hi), in rank order.
class CombinationStream {
public:
    CombinationStream(ResidueSet pool, uint32_t size, uint64_t lo, uint64_t hi);

    std::optional<ResidueSet> next();
    uint64_t total() const { return hi_ - lo_; }

private:
    ResidueSet pool_;
    uint32_t size_;
    uint64_t lo_, hi_, emitted_ = 0;
    std::vector<uint32_t> idx_;
    bool exhausted_ = false;
};

/// The combinations of pool of a given size with colex rank in [lo, hi).
/// Ranges out of [0, C(|pool|, size)) are rejected.
CombinationStream enumerate_subsets(const ResidueSet& pool, uint32_t size,
                                    uint64_t lo, uint64_t hi);

}  // namespace znsum
