#pragma once

#include <vector>

#include "znsum/zn.hpp"

namespace znsum {

/// Subset-sum closures of a set A: s holds every nonempty sum of distinct
/// elements of A, s0 adjoins 0. s is tracked by its own recurrence; whether
/// 0 is itself a nonempty sum is not recoverable from s0 alone.
struct ClosurePair {
    ZnSet s;
    ZnSet s0;
};

/// { x + y mod n : x in X, y in Y }, as a union of rotates of X over Y.
ZnSet sumset(const ZnSet& x, const ZnSet& y);

ClosurePair subset_sums(const ResidueSet& a);

/// All k+1 DP layers: layer j = sums of exactly-j-element subsets of A.
/// Elements are folded in ascending residue order so layers reproduce
/// bit-for-bit across runs.
std::vector<ZnSet> k_fold_layers(const ResidueSet& a, uint32_t k);

/// Sums of exactly-k-element subsets of A. Requires 0 <= k <= |A|.
ZnSet k_fold_sums(const ResidueSet& a, uint32_t k);

/// Olson's translate-escape statistic |(B + x) \ B|.
uint32_t lambda(const ZnSet& b, uint32_t x);

/// True iff every element of <A> is a nonempty sum of distinct elements of A.
bool is_complete(const ResidueSet& a);

}  // namespace znsum
