#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracle.hpp"
#include "znsum/rng.hpp"
#include "znsum/sums.hpp"

using namespace znsum;

namespace {

ZnSet make_set(uint32_t n, std::initializer_list<uint32_t> elems) {
    return ZnSet::from_elements(Modulus(n), std::vector<uint32_t>(elems));
}

std::vector<uint32_t> random_subset(SplitMix64& g, uint32_t n, uint32_t max_size) {
    uint32_t k = uint32_t(bounded(g, std::min(n, max_size) + 1));
    return sample_distinct(g, n, k);
}

void check_against_oracle(uint32_t n, const std::vector<uint32_t>& elems) {
    ResidueSet a(Modulus(n), elems);
    auto got = subset_sums(a);
    auto want = oracle::closures(n, elems);
    CHECK(got.s.elements() == oracle::elements(want.s));
    CHECK(got.s0.elements() == oracle::elements(want.s0));
    for (uint32_t k = 0; k <= a.size(); ++k)
        CHECK(k_fold_sums(a, k).elements() == oracle::elements(want.layers[k]));
}

}  // namespace

TEST_CASE("sumset examples") {
    CHECK(sumset(make_set(5, {0, 1}), make_set(5, {0, 2})) ==
          make_set(5, {0, 1, 2, 3}));
    ZnSet y = make_set(9, {2, 5, 8});
    CHECK(sumset(make_set(9, {0}), y) == y);
    CHECK(sumset(make_set(4, {1, 2}), make_set(4, {3})) == make_set(4, {0, 1}));
    CHECK(sumset(ZnSet(Modulus(6)), make_set(6, {1})).empty());
    CHECK_THROWS_AS(sumset(make_set(5, {1}), make_set(6, {1})),
                    std::invalid_argument);
}

TEST_CASE("subset_sums examples") {
    auto cp = subset_sums(ResidueSet(Modulus(3), {1, 2}));
    CHECK(cp.s == make_set(3, {0, 1, 2}));
    CHECK(cp.s0 == make_set(3, {0, 1, 2}));

    cp = subset_sums(ResidueSet(Modulus(5), {1}));
    CHECK(cp.s == make_set(5, {1}));
    CHECK(cp.s0 == make_set(5, {0, 1}));

    cp = subset_sums(ResidueSet(Modulus(4), {1, 3}));
    CHECK(cp.s == make_set(4, {0, 1, 3}));
    CHECK(cp.s0 == make_set(4, {0, 1, 3}));

    cp = subset_sums(ResidueSet(Modulus(6), {}));
    CHECK(cp.s.empty());
    CHECK(cp.s0 == make_set(6, {0}));
}

TEST_CASE("closure pair invariants") {
    SplitMix64 g{4242};
    for (int it = 0; it < 200; ++it) {
        uint32_t n = 2 + uint32_t(bounded(g, 40));
        auto elems = random_subset(g, n, 10);
        ResidueSet a(Modulus(n), elems);
        auto cp = subset_sums(a);
        CHECK(cp.s0.test(0));
        CHECK(cp.s.is_subset_of(cp.s0));
        CHECK(cp.s0.count() - cp.s.count() <= 1);
        ZnSet s_plus_zero = cp.s;
        s_plus_zero.set(0);
        CHECK(s_plus_zero == cp.s0);
        for (uint32_t e : elems) CHECK(cp.s.test(e));
    }
}

TEST_CASE("k_fold_sums examples") {
    ResidueSet a(Modulus(7), {1, 2, 3});
    CHECK(k_fold_sums(a, 2) == make_set(7, {3, 4, 5}));
    CHECK(k_fold_sums(a, 0) == make_set(7, {0}));
    CHECK(k_fold_sums(a, 3) == make_set(7, {6}));
    CHECK_THROWS_AS(k_fold_sums(a, 4), std::invalid_argument);
}

TEST_CASE("lambda examples") {
    CHECK(lambda(make_set(11, {0, 1, 2, 3, 4}), 3) == 3);
    CHECK(lambda(make_set(11, {0, 1, 2, 3, 4}), 0) == 0);
    CHECK(lambda(make_set(5, {0, 1}), 2) == 2);
    CHECK_THROWS_AS(lambda(make_set(5, {0}), 5), std::invalid_argument);
}

TEST_CASE("is_complete examples") {
    CHECK(is_complete(ResidueSet(Modulus(5), {1, 2, 3, 4})));
    CHECK_FALSE(is_complete(ResidueSet(Modulus(4), {1, 3})));
    // completeness is relative to <A>, not Z_n
    CHECK(is_complete(ResidueSet(Modulus(8), {2, 4, 6})));
    CHECK_THROWS_AS(is_complete(ResidueSet(Modulus(5), {})),
                    std::invalid_argument);
}

TEST_CASE("closures match brute force exhaustively for small moduli") {
    for (uint32_t n = 2; n <= 10; ++n) {
        for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
            std::vector<uint32_t> elems;
            for (uint32_t i = 0; i < n; ++i)
                if (mask >> i & 1) elems.push_back(i);
            check_against_oracle(n, elems);
        }
    }
}

TEST_CASE("closures match brute force on random instances") {
    SplitMix64 g{20240817};
    for (int it = 0; it < 300; ++it) {
        uint32_t n = 2 + uint32_t(bounded(g, 59));
        check_against_oracle(n, random_subset(g, n, 15));
    }
}

TEST_CASE("layers union to the nonempty closure") {
    SplitMix64 g{5150};
    for (int it = 0; it < 100; ++it) {
        uint32_t n = 2 + uint32_t(bounded(g, 50));
        auto elems = random_subset(g, n, 12);
        ResidueSet a(Modulus(n), elems);
        ZnSet acc{Modulus(n)};
        for (uint32_t k = 1; k <= a.size(); ++k) acc |= k_fold_sums(a, k);
        CHECK(acc == subset_sums(a).s);
    }
}

TEST_CASE("closure decomposes as a fold of {0,x} sumsets in any order") {
    SplitMix64 g{99};
    for (int it = 0; it < 100; ++it) {
        uint32_t n = 2 + uint32_t(bounded(g, 50));
        auto elems = random_subset(g, n, 10);
        ResidueSet a(Modulus(n), elems);

        auto fold = [&](const std::vector<uint32_t>& order) {
            ZnSet acc = ZnSet::singleton(Modulus(n), 0);
            for (uint32_t x : order)
                acc = sumset(acc, ZnSet::from_elements(
                                      Modulus(n), std::vector<uint32_t>{0, x}));
            return acc;
        };
        std::vector<uint32_t> fwd(elems), rev(elems);
        std::reverse(rev.begin(), rev.end());
        ZnSet s0 = subset_sums(a).s0;
        CHECK(fold(fwd) == s0);
        CHECK(fold(rev) == s0);
    }
}

TEST_CASE("sumset size respects the additive lower bound") {
    SplitMix64 g{2718};
    for (int it = 0; it < 200; ++it) {
        uint32_t n = 2 + uint32_t(bounded(g, 80));
        std::vector<uint32_t> units_of_n;
        for (uint32_t x = 1; x < n; ++x)
            if (std::gcd(x, n) == 1) units_of_n.push_back(x);
        uint32_t ty = uint32_t(bounded(g, units_of_n.size() + 1));
        std::vector<uint32_t> yi = sample_distinct(
            g, uint32_t(units_of_n.size()), ty);
        std::vector<uint32_t> ys{0};
        for (uint32_t i : yi) ys.push_back(units_of_n[i]);
        uint32_t sx = 1 + uint32_t(bounded(g, n));
        std::vector<uint32_t> xs = sample_distinct(g, n, sx);

        ZnSet x = ZnSet::from_elements(Modulus(n), xs);
        ZnSet y = ZnSet::from_elements(Modulus(n), ys);
        uint32_t bound = std::min<uint32_t>(n, sx + uint32_t(ys.size()) - 1);
        CHECK(sumset(x, y).count() >= bound);
    }
}

TEST_CASE("completeness is monotone under unit supersets") {
    SplitMix64 g{1618};
    int found = 0;
    while (found < 50) {
        uint32_t n = 3 + uint32_t(bounded(g, 40));
        std::vector<uint32_t> units_of_n;
        for (uint32_t x = 1; x < n; ++x)
            if (std::gcd(x, n) == 1) units_of_n.push_back(x);
        uint32_t k = 1 + uint32_t(bounded(g, units_of_n.size()));
        auto idx = sample_distinct(g, uint32_t(units_of_n.size()), k);
        std::vector<uint32_t> elems;
        for (uint32_t i : idx) elems.push_back(units_of_n[i]);
        ResidueSet a(Modulus(n), elems);
        if (!is_complete(a)) continue;
        ++found;
        // grow with more units; the subgroup stays Z_n
        std::vector<uint32_t> grown = elems;
        for (uint32_t u : units_of_n)
            if (std::find(grown.begin(), grown.end(), u) == grown.end()) {
                grown.push_back(u);
                break;
            }
        CHECK(is_complete(ResidueSet(Modulus(n), grown)));
    }
}
