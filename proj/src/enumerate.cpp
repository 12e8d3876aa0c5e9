#include "znsum/enumerate.hpp"

#include <stdexcept>

namespace znsum {

uint64_t binomial_capped(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // exact at every step: C(n-k+i, i)
        if (r >= kBinomCap) return kBinomCap;
    }
    return uint64_t(r);
}

uint64_t colex_rank(std::span<const uint32_t> c) {
    uint64_t rank = 0;
    for (size_t i = 0; i < c.size(); ++i)
        rank += binomial_capped(c[i], uint64_t(i) + 1);
    return rank;
}

std::vector<uint32_t> colex_unrank(uint64_t rank, uint32_t k, uint32_t pool) {
    std::vector<uint32_t> c(k);
    for (uint32_t i = k; i >= 1; --i) {
        // largest v with C(v, i) <= rank
        uint32_t v = i - 1;
        while (v + 1 < pool && binomial_capped(v + 1, i) <= rank) ++v;
        c[i - 1] = v;
        rank -= binomial_capped(v, i);
        pool = v;  // next index must be strictly below this one
    }
    return c;
}

bool colex_next(std::vector<uint32_t>& c, uint32_t pool) {
    const size_t k = c.size();
    for (size_t i = 0; i < k; ++i) {
        uint32_t limit = (i + 1 < k) ? c[i + 1] : pool;
        if (c[i] + 1 < limit) {
            ++c[i];
            for (size_t j = 0; j < i; ++j) c[j] = uint32_t(j);
            return true;
        }
    }
    return false;
}

CombinationStream::CombinationStream(ResidueSet pool, uint32_t size,
                                     uint64_t lo, uint64_t hi)
    : pool_(std::move(pool)), size_(size), lo_(lo), hi_(hi) {
    uint64_t space = binomial_capped(pool_.size(), size_);
    if (size_ > pool_.size())
        throw std::invalid_argument("combination size exceeds pool");
    if (lo_ > hi_ || hi_ > space)
        throw std::invalid_argument("rank range out of bounds");
    if (lo_ == hi_) {
        exhausted_ = true;
        return;
    }
    idx_ = colex_unrank(lo_, size_, pool_.size());
}

std::optional<ResidueSet> CombinationStream::next() {
    if (exhausted_ || emitted_ >= hi_ - lo_) return std::nullopt;
    std::vector<uint32_t> elems;
    elems.reserve(size_);
    for (uint32_t i : idx_) elems.push_back(pool_[i]);
    ResidueSet out(pool_.modulus(), std::move(elems));
    ++emitted_;
    if (!colex_next(idx_, pool_.size())) exhausted_ = true;
    return out;
}

CombinationStream enumerate_subsets(const ResidueSet& pool, uint32_t size,
                                    uint64_t lo, uint64_t hi) {
    return CombinationStream(pool, size, lo, hi);
}

}  // namespace znsum
