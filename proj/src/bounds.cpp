#include "znsum/bounds.hpp"

#include <stdexcept>

namespace znsum {

uint64_t isqrt_u64(uint64_t x) {
    uint64_t r = 0;
    uint64_t bit = uint64_t(1) << 62;
    while (bit > x) bit >>= 2;
    while (bit) {
        if (x >= r + bit) {
            x -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
        bit >>= 2;
    }
    return r;
}

namespace {
// Least m with m^2 >= x.
uint64_t ceil_sqrt(uint64_t x) {
    uint64_t s = isqrt_u64(x);
    return s * s == x ? s : s + 1;
}
}  // namespace

uint32_t main_threshold(uint32_t n) {
    if (n < 5)
        throw std::invalid_argument("main_threshold requires n >= 5");
    // least m with (m-1)^2 > 4(n-4): m-1 = isqrt(4(n-4)) + 1
    return uint32_t(isqrt_u64(4 * (uint64_t(n) - 4)) + 2);
}

uint32_t olson_threshold(uint32_t p) {
    if (p < 2)
        throw std::invalid_argument("olson_threshold requires p >= 2");
    return uint32_t(ceil_sqrt(4 * (uint64_t(p) - 1)));
}

uint32_t chowla_bound(uint32_t n, uint32_t sx, uint32_t sy) {
    if (sx < 1 || sy < 1 || sx > n || sy > n)
        throw std::invalid_argument("set sizes must lie in [1, n]");
    uint64_t sum = uint64_t(sx) + sy - 1;
    return uint32_t(sum < n ? sum : n);
}

bool mainlemma_bound_holds(uint32_t n, uint32_t a, uint32_t s0_size) {
    if (a < 2)
        throw std::invalid_argument("the subset-sum size bound requires |A| >= 2");
    uint64_t rhs = std::min<uint64_t>(uint64_t(n) + 2, 6 + uint64_t(a) * (a - 1));
    return 2 * uint64_t(s0_size) >= rhs;
}

bool lamb_bound_holds(uint32_t a, uint32_t b, uint32_t alpha) {
    if (a < 3 || b < 1)
        throw std::invalid_argument("translate-escape bound requires a >= 3, b >= 1");
    return int64_t(alpha) * b > int64_t(a) * (int64_t(b) - a + 3);
}

ConjectureParams conjecture_params(uint32_t n) {
    if (n < 2)
        throw std::invalid_argument("conjecture_params requires n >= 2");
    return ConjectureParams{
        uint32_t(ceil_sqrt(uint64_t(n) - 1)),
        uint32_t(ceil_sqrt(4 * (uint64_t(n) - 1))),
    };
}

ThresholdResult threshold(ThresholdKind kind, uint32_t n) {
    switch (kind) {
        case ThresholdKind::main_theorem:
            return {n, kind, main_threshold(n)};
        case ThresholdKind::olson:
            return {n, kind, olson_threshold(n)};
        case ThresholdKind::conjecture_size:
            return {n, kind, conjecture_params(n).min_size};
        case ThresholdKind::conjecture_k:
            return {n, kind, conjecture_params(n).k};
    }
    throw std::logic_error("unreachable");
}

std::string_view threshold_kind_name(ThresholdKind kind) {
    switch (kind) {
        case ThresholdKind::main_theorem: return "main_theorem";
        case ThresholdKind::olson: return "olson";
        case ThresholdKind::conjecture_size: return "conjecture_size";
        case ThresholdKind::conjecture_k: return "conjecture_k";
    }
    throw std::logic_error("unreachable");
}

ThresholdKind threshold_kind_from_name(std::string_view name) {
    if (name == "main_theorem") return ThresholdKind::main_theorem;
    if (name == "olson") return ThresholdKind::olson;
    if (name == "conjecture_size") return ThresholdKind::conjecture_size;
    if (name == "conjecture_k") return ThresholdKind::conjecture_k;
    throw std::invalid_argument("unknown threshold kind");
}

}  // namespace znsum
