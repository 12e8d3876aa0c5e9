#include "campaign_util.hpp"

#include <numeric>
#include <stdexcept>

namespace znsum::detail {

void sample_elems(SplitMix64& g, uint32_t pool, uint32_t k,
                  std::vector<uint32_t>& out) {
    out.clear();
    if (k > pool) throw std::invalid_argument("sample larger than pool");
    if (pool <= 64) {
        uint64_t m = sample_mask(g, pool, k);
        out = mask_elements(m);
        return;
    }
    std::vector<char> seen(pool, 0);
    uint64_t attempts = 0, limit = 16 * uint64_t(k) + 64;
    while (out.size() < k && attempts < limit) {
        ++attempts;
        uint32_t v = uint32_t(bounded(g, pool));
        if (!seen[v]) {
            seen[v] = 1;
            out.push_back(v);
        }
    }
    for (uint32_t v = 0; out.size() < k; ++v) {
        if (!seen[v]) {
            seen[v] = 1;
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
}

void sample_units(SplitMix64& g, uint32_t n, uint32_t k,
                  std::vector<uint32_t>& out) {
    out.clear();
    std::vector<char> seen(n, 0);
    uint64_t attempts = 0, limit = 64 * uint64_t(k) + 256;
    while (out.size() < k && attempts < limit) {
        ++attempts;
        uint32_t v = uint32_t(bounded(g, n));
        if (!seen[v] && std::gcd(v, n) == 1) {
            seen[v] = 1;
            out.push_back(v);
        }
    }
    for (uint32_t v = 1; out.size() < k && v < n; ++v) {
        if (!seen[v] && std::gcd(v, n) == 1) {
            seen[v] = 1;
            out.push_back(v);
        }
    }
    if (out.size() < k) throw std::invalid_argument("not enough units to sample");
    std::sort(out.begin(), out.end());
}

std::vector<std::pair<uint32_t, uint32_t>> unit_pairs(uint32_t n) {
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    for (uint32_t x = 1; 2 * x < n; ++x)
        if (std::gcd(x, n) == 1) pairs.emplace_back(x, n - x);
    return pairs;
}

AntisymSpace::AntisymSpace(uint32_t n, uint32_t smin_in)
    : pairs(unit_pairs(n)), smin(smin_in) {
    uint32_t p = uint32_t(pairs.size());
    size_base.assign(p + 2, 0);
    uint64_t acc = 0;
    for (uint32_t s = smin; s <= p; ++s) {
        size_base[s] = acc;
        acc += binomial_capped(p, s) << s;
    }
    size_base[p + 1] = acc;
    total = acc;
}

std::vector<uint32_t> AntisymSpace::decode(uint64_t idx) const {
    uint32_t p = uint32_t(pairs.size());
    uint32_t s = smin;
    while (s < p && size_base[s + 1] <= idx) ++s;
    uint64_t off = idx - size_base[s];
    uint64_t signs = off & ((uint64_t(1) << s) - 1);
    uint64_t combo_rank = off >> s;
    std::vector<uint32_t> combo = colex_unrank(combo_rank, s, p);
    std::vector<uint32_t> elems(s);
    for (uint32_t i = 0; i < s; ++i)
        elems[i] = (signs >> i) & 1 ? pairs[combo[i]].second : pairs[combo[i]].first;
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<uint32_t> AntisymSpace::sample(SplitMix64& g) const {
    uint32_t p = uint32_t(pairs.size());
    uint32_t s = smin + uint32_t(bounded(g, p - smin + 1));
    std::vector<uint32_t> combo;
    sample_elems(g, p, s, combo);
    uint64_t signs = g.next();
    std::vector<uint32_t> elems(s);
    for (uint32_t i = 0; i < s; ++i)
        elems[i] = (signs >> i) & 1 ? pairs[combo[i]].second : pairs[combo[i]].first;
    std::sort(elems.begin(), elems.end());
    return elems;
}

}  // namespace znsum::detail
