#pragma once

// Internal machinery shared by the verification campaigns. Everything here
// is deliberately partition-independent: an exhaustive instance is a pure
// function of its flat rank, a sampled instance of (seed, trial index), and
// partial results merge by a commutative fold.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <thread>
#include <vector>

#include "znsum/report.hpp"
#include "znsum/rng.hpp"
#include "znsum/verify.hpp"

namespace znsum::detail {

struct Partial {
    uint64_t tested = 0;
    uint64_t aux = 0;  // campaign-specific additive tally
    std::vector<Witness> violations;
    std::vector<Witness> findings;
};

inline void merge_into(Partial& acc, Partial&& p) {
    acc.tested += p.tested;
    acc.aux += p.aux;
    std::move(p.violations.begin(), p.violations.end(),
              std::back_inserter(acc.violations));
    std::move(p.findings.begin(), p.findings.end(),
              std::back_inserter(acc.findings));
}

/// Splits [0, total) into contiguous chunks, one worker thread per chunk.
/// fn(lo, hi, partial) must derive every instance from its index alone.
template <class Fn>
Partial run_parallel(uint64_t total, uint32_t jobs, Fn&& fn) {
    Partial merged;
    if (total == 0) return merged;
    uint64_t chunks = std::max<uint32_t>(jobs, 1);
    chunks = std::min<uint64_t>(chunks, total);
    if (chunks == 1) {
        fn(uint64_t(0), total, merged);
    } else {
        std::vector<Partial> parts(chunks);
        std::vector<std::thread> threads;
        threads.reserve(chunks);
        uint64_t per = total / chunks, rem = total % chunks, lo = 0;
        for (uint64_t c = 0; c < chunks; ++c) {
            uint64_t hi = lo + per + (c < rem ? 1 : 0);
            threads.emplace_back(
                [&fn, &parts, c, lo, hi] { fn(lo, hi, parts[c]); });
            lo = hi;
        }
        for (auto& t : threads) t.join();
        for (auto& p : parts) merge_into(merged, std::move(p));
    }
    canonicalize(merged.violations);
    canonicalize(merged.findings);
    return merged;
}

class Stopwatch {
public:
    int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

inline void check_budget(uint64_t total, const CampaignConfig& cfg) {
    if (total > cfg.budget && !cfg.budget_override) throw BudgetError(total);
}

inline uint64_t sat_u64(unsigned __int128 v) {
    return v > ~uint64_t(0) ? ~uint64_t(0) : uint64_t(v);
}

// ---- single-word set kernels (n <= 64) ------------------------------------

inline uint64_t full_mask(uint32_t n) {
    return n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
}

inline uint64_t rot_mask(uint64_t v, uint32_t x, uint32_t n, uint64_t full) {
    return x == 0 ? v : (((v << x) | (v >> (n - x))) & full);
}

inline std::vector<uint32_t> mask_elements(uint64_t m) {
    std::vector<uint32_t> out;
    while (m) {
        out.push_back(uint32_t(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

inline std::string mask_literal(uint64_t m) {
    return format_set_literal(mask_elements(m));
}

/// S_A^0 of the bits of elems, folded in ascending order.
inline uint64_t closure0_mask(uint64_t elems, uint32_t n, uint64_t full) {
    uint64_t s0 = 1;
    while (elems) {
        uint32_t x = uint32_t(std::countr_zero(elems));
        elems &= elems - 1;
        s0 |= rot_mask(s0, x, n, full);
    }
    return s0;
}

/// S_A (nonempty sums only).
inline uint64_t closure_s_mask(uint64_t elems, uint32_t n, uint64_t full) {
    uint64_t s = 0;
    while (elems) {
        uint32_t x = uint32_t(std::countr_zero(elems));
        elems &= elems - 1;
        s = s | rot_mask(s, x, n, full) | (uint64_t(1) << x);
    }
    return s;
}

inline uint32_t lambda_mask(uint64_t b, uint32_t x, uint32_t n, uint64_t full) {
    return uint32_t(std::popcount(rot_mask(b, x, n, full) & ~b));
}

inline uint64_t sumset_mask(uint64_t xm, uint64_t ym, uint32_t n, uint64_t full) {
    if (!xm || !ym) return 0;
    uint64_t base = xm, offs = ym;
    if (std::popcount(offs) > std::popcount(base)) std::swap(base, offs);
    uint64_t acc = 0;
    while (offs) {
        uint32_t y = uint32_t(std::countr_zero(offs));
        offs &= offs - 1;
        acc |= rot_mask(base, y, n, full);
    }
    return acc;
}

// ---- deterministic samplers ------------------------------------------------

/// k distinct bits among [0, pool), pool <= 64. Floyd's sampling.
inline uint64_t sample_mask(SplitMix64& g, uint32_t pool, uint32_t k) {
    uint64_t out = 0;
    for (uint32_t j = pool - k; j < pool; ++j) {
        uint64_t t = bounded(g, uint64_t(j) + 1);
        if (out & (uint64_t(1) << t))
            out |= uint64_t(1) << j;
        else
            out |= uint64_t(1) << t;
    }
    return out;
}

/// k distinct residues from [0, pool) by rejection, sorted into out.
/// Falls back to an ascending sweep if rejection stalls near k == pool;
/// the fallback is still a pure function of the generator state.
void sample_elems(SplitMix64& g, uint32_t pool, uint32_t k,
                  std::vector<uint32_t>& out);

/// k distinct units of n, sorted into out.
void sample_units(SplitMix64& g, uint32_t n, uint32_t k,
                  std::vector<uint32_t>& out);

// ---- antisymmetric unit sets as sign choices over {x, n-x} pairs -----------

/// The negation pairs {x, n-x} over the units of n, x < n-x, ascending in x.
/// Every antisymmetric unit set picks at most one element per pair, so the
/// size-s slice of that space has exactly C(P, s) * 2^s members.
std::vector<std::pair<uint32_t, uint32_t>> unit_pairs(uint32_t n);

/// Flat index space over antisymmetric unit sets of size s in [smin, P]:
/// index = (combinations of pairs in colex order) * 2^s + sign bits.
struct AntisymSpace {
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    uint32_t smin = 0;
    std::vector<uint64_t> size_base;  // cumulative index where each size starts
    uint64_t total = 0;

    AntisymSpace(uint32_t n, uint32_t smin_in);
    /// Decodes a flat index into ascending elements.
    std::vector<uint32_t> decode(uint64_t idx) const;
    /// Draws a uniform size in [smin, P] and then pairs and signs.
    std::vector<uint32_t> sample(SplitMix64& g) const;
};

}  // namespace znsum::detail
