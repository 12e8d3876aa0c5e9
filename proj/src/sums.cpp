#include "znsum/sums.hpp"

#include <bit>
#include <stdexcept>

namespace znsum {

ZnSet sumset(const ZnSet& x, const ZnSet& y) {
    if (!(x.modulus() == y.modulus()))
        throw std::invalid_argument("modulus mismatch");
    ZnSet acc(x.modulus());
    if (x.empty() || y.empty()) return acc;
    // Rotate the larger set by each element of the smaller one.
    const ZnSet& base = x.count() >= y.count() ? x : y;
    const ZnSet& offs = x.count() >= y.count() ? y : x;
    for (uint32_t e : offs.elements()) acc.or_with_rotated(base, e);
    return acc;
}

ClosurePair subset_sums(const ResidueSet& a) {
    const Modulus m = a.modulus();
    ZnSet s0(m), s(m), scratch(m);
    s0.set(0);
    const uint32_t full = a.n();
    bool s0_full = false;
    for (uint32_t x : a.elements()) {
        // s0 <- s0 u (s0 + x); s <- s u (s + x) u {x}
        scratch.clear();
        scratch.or_with_rotated(s0, x);
        s0 |= scratch;
        scratch.clear();
        scratch.or_with_rotated(s, x);
        s |= scratch;
        s.set(x);
        // s is contained in s0, so s cannot saturate first.
        if (!s0_full) s0_full = s0.count() == full;
        if (s0_full && s.count() == full) break;
    }
    return ClosurePair{std::move(s), std::move(s0)};
}

std::vector<ZnSet> k_fold_layers(const ResidueSet& a, uint32_t k) {
    if (k > a.size()) throw std::invalid_argument("k exceeds |A|");
    const Modulus m = a.modulus();
    std::vector<ZnSet> layers(k + 1, ZnSet(m));
    layers[0].set(0);
    ZnSet scratch(m);
    uint32_t processed = 0;
    for (uint32_t x : a.elements()) {
        ++processed;
        uint32_t top = std::min(k, processed);
        for (uint32_t j = top; j >= 1; --j) {
            scratch.clear();
            scratch.or_with_rotated(layers[j - 1], x);
            layers[j] |= scratch;
        }
    }
    return layers;
}

ZnSet k_fold_sums(const ResidueSet& a, uint32_t k) {
    auto layers = k_fold_layers(a, k);
    return std::move(layers[k]);
}

uint32_t lambda(const ZnSet& b, uint32_t x) {
    if (x >= b.n()) throw std::invalid_argument("residue out of range");
    ZnSet t(b.modulus());
    t.or_with_rotated(b, x);
    t.subtract(b);
    return t.count();
}

bool is_complete(const ResidueSet& a) {
    if (a.empty()) throw std::invalid_argument("completeness of the empty set is undefined");
    return subset_sums(a).s == subgroup_generated(a);
}

}  // namespace znsum
