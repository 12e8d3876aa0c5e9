#include "znsum/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace znsum {

std::vector<uint32_t> sample_distinct(SplitMix64& g, uint32_t pool, uint32_t k) {
    if (k > pool) throw std::invalid_argument("cannot sample more than the pool");
    std::vector<uint32_t> out;
    out.reserve(k);
    for (uint32_t j = pool - k; j < pool; ++j) {
        uint32_t t = uint32_t(bounded(g, uint64_t(j) + 1));
        if (std::find(out.begin(), out.end(), t) == out.end())
            out.push_back(t);
        else
            out.push_back(j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace znsum
