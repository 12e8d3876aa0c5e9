#pragma once

#include <cstdint>
#include <string_view>

namespace znsum {

// Every threshold below is evaluated through squared integer inequalities.
// Several sit exactly on perfect-square boundaries (4p-4 at p = 5, for one),
// where a floating-point radical would misclassify.

/// floor(sqrt(x)), digit-by-digit; no floating point anywhere in this module.
uint64_t isqrt_u64(uint64_t x);

/// Least m with (m-1)^2 > 4(n-4): unit subsets of Z_n of at least this size
/// are always complete. Defined for n >= 5 only; n = 4 admits the incomplete
/// witness {1,3} and is rejected rather than patched.
uint32_t main_threshold(uint32_t n);

/// Least m with m^2 >= 4p - 4. Requires p >= 2; primality is the caller's concern.
uint32_t olson_threshold(uint32_t p);

/// min(n, sx + sy - 1). Requires 1 <= sx, sy <= n.
uint32_t chowla_bound(uint32_t n, uint32_t sx, uint32_t sy);

/// 2*s0_size >= min(n+2, 6 + a(a-1)); the doubled form avoids the
/// half-integer (n+2)/2. Requires a >= 2.
bool mainlemma_bound_holds(uint32_t n, uint32_t a, uint32_t s0_size);

/// Strict translate-escape bound: alpha*b > a*(b - a + 3), the integer-exact
/// form of alpha > a - a(a-3)/b. Requires a >= 3, b >= 1. This reports the
/// bound exactly as printed; the audit layer interprets failures.
bool lamb_bound_holds(uint32_t a, uint32_t b, uint32_t alpha);

struct ConjectureParams {
    uint32_t k;         // least k with k^2 >= n-1
    uint32_t min_size;  // least m with m^2 >= 4n-4
};
ConjectureParams conjecture_params(uint32_t n);

enum class ThresholdKind { main_theorem, olson, conjecture_size, conjecture_k };

struct ThresholdResult {
    uint32_t n;
    ThresholdKind kind;
    uint32_t value;
};

ThresholdResult threshold(ThresholdKind kind, uint32_t n);

std::string_view threshold_kind_name(ThresholdKind kind);
ThresholdKind threshold_kind_from_name(std::string_view name);

}  // namespace znsum
