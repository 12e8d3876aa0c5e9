#include <doctest.h>

#include <numeric>

#include "oracle.hpp"
#include "znsum/rng.hpp"
#include "znsum/verify.hpp"

using namespace znsum;

TEST_CASE("antisymmetric_partition follows the pairing rule") {
    auto [a1, a2] = antisymmetric_partition(ResidueSet(Modulus(11), {1, 2, 9, 10}));
    CHECK(a1.literal() == "1,2");
    CHECK(a2.literal() == "9,10");

    // no negatives present: unpaired elements fill the left half first
    auto [b1, b2] = antisymmetric_partition(ResidueSet(Modulus(7), {1, 2, 3}));
    CHECK(b1.literal() == "1,2");
    CHECK(b2.literal() == "3");

    auto [c1, c2] = antisymmetric_partition(ResidueSet(Modulus(5), {1, 4}));
    CHECK(c1.literal() == "1");
    CHECK(c2.literal() == "4");

    CHECK_THROWS_AS(antisymmetric_partition(ResidueSet(Modulus(8), {1, 2})),
                    std::invalid_argument);  // 2 is not a unit
}

TEST_CASE("antisymmetric_partition postconditions hold exhaustively") {
    for (uint32_t n = 3; n <= 14; ++n) {
        std::vector<uint32_t> pool = units(Modulus(n)).elements();
        for (uint64_t mask = 1; mask < (uint64_t(1) << pool.size()); ++mask) {
            std::vector<uint32_t> elems;
            for (uint32_t i = 0; i < pool.size(); ++i)
                if (mask >> i & 1) elems.push_back(pool[i]);
            ResidueSet a(Modulus(n), elems);
            auto [a1, a2] = antisymmetric_partition(a);
            CHECK(a1.size() == (a.size() + 1) / 2);
            CHECK(a2.size() == a.size() / 2);
            CHECK(a1.antisymmetric());
            CHECK(a2.antisymmetric());
            std::vector<uint32_t> merged(a1.elements().begin(),
                                         a1.elements().end());
            merged.insert(merged.end(), a2.elements().begin(),
                          a2.elements().end());
            std::sort(merged.begin(), merged.end());
            CHECK(merged == elems);
        }
    }
}

TEST_CASE("antisymmetric_partition on random larger unit sets") {
    SplitMix64 g{6464};
    for (int it = 0; it < 200; ++it) {
        uint32_t n = 3 + uint32_t(bounded(g, 48));
        std::vector<uint32_t> pool = units(Modulus(n)).elements();
        uint32_t k = 1 + uint32_t(bounded(g, std::min<uint32_t>(20, pool.size())));
        auto idx = sample_distinct(g, uint32_t(pool.size()), k);
        std::vector<uint32_t> elems;
        for (uint32_t i : idx) elems.push_back(pool[i]);
        ResidueSet a(Modulus(n), elems);
        auto [a1, a2] = antisymmetric_partition(a);
        CHECK(a1.size() + a2.size() == a.size());
        CHECK(a1.size() == (a.size() + 1) / 2);
        CHECK(a1.antisymmetric());
        CHECK(a2.antisymmetric());
    }
}

TEST_CASE("replay_main_proof even case") {
    MainProofTrace t = replay_main_proof(5, ResidueSet(Modulus(5), {1, 2, 3, 4}));
    CHECK(t.k == 4);
    CHECK(t.k_even);
    CHECK(t.eq9_lhs == 8);  // 6 + 2*1
    CHECK(t.eq9_rhs == 7);
    CHECK_FALSE(t.eq9_holds);
    CHECK_FALSE(t.premise_incomplete);  // the set is complete; premise absent
    CHECK(t.hypothesis_met);            // 9 + 16 > 20
}

TEST_CASE("replay_main_proof odd case walks the whole argument") {
    MainProofTrace t =
        replay_main_proof(13, ResidueSet(Modulus(13), {1, 2, 3, 11, 12}));
    CHECK(t.k == 5);
    CHECK_FALSE(t.k_even);
    CHECK(t.half == 2);
    CHECK(t.a1 == "1,2,3");
    CHECK(t.a2 == "11,12");
    CHECK(t.s0_a2 == 4);  // {0, 10, 11, 12}
    // y maximizes the escape against S_{A2}^0: lambda(1)=1, lambda(2)=2,
    // lambda(3)=3
    CHECK(t.y == 3);
    CHECK(t.lambda_y == 3);
    CHECK(t.c1 == "1,2");
    CHECK(t.c2 == "3,11,12");
    CHECK(t.s0_c1 == 4);
    CHECK(t.s0_c2 == 7);
    CHECK(t.pair_sum == 11);
    CHECK(t.pair_bound == 14);
    CHECK(t.pair_within_bound);
    CHECK(t.eq9_holds);  // 8 < 15

    // every closure size in the trace is reproducible from scratch
    CHECK(subset_sums(ResidueSet::parse(Modulus(13), t.c2)).s0.count() ==
          t.s0_c2);
}

TEST_CASE("replay_main_proof rejects bad input") {
    CHECK_THROWS_AS(replay_main_proof(13, ResidueSet(Modulus(13), {1, 2, 3})),
                    std::invalid_argument);  // too small
    CHECK_THROWS_AS(
        replay_main_proof(12, ResidueSet(Modulus(12), {1, 2, 5, 7})),
        std::invalid_argument);  // 2 is not a unit mod 12
}

TEST_CASE("replay_lemma_eh on the worked instance") {
    ResidueSet a(Modulus(11), {1, 2, 3});
    ZnSet b = ZnSet::from_elements(Modulus(11),
                                   std::vector<uint32_t>{0, 1, 2, 3, 4});
    LemmaEhTrace t = replay_lemma_eh(11, a, b);
    REQUIRE(t.ok);
    CHECK(t.t == 7);
    CHECK(t.m == 1);
    CHECK(t.r == 1);
    CHECK(t.a_star == "0,1,2,3,8,9,10");
    CHECK(t.layer_sizes.size() == 2);
    CHECK(t.layer_sizes[0] == 7);
    CHECK(t.layers_ok);
    CHECK(t.alpha == 3);

    // C holds t+1 = 8 residues including all of A*
    auto c = parse_set_literal(t.c);
    CHECK(c.size() == 8);
    for (uint32_t e : parse_set_literal(t.a_star))
        CHECK(std::find(c.begin(), c.end(), e) != c.end());

    // sum of escapes over E = C \ {0}, recomputed naively
    uint64_t sum = 0;
    for (uint32_t e : c)
        if (e != 0)
            sum += oracle::lambda(11, std::vector<uint32_t>{0, 1, 2, 3, 4}, e);
    CHECK(sum == t.sum_lambda);

    CHECK(t.mid_bound == 3 * 2 * (3 + 1));  // alpha (m+1)(ma + r)
    CHECK(t.upper_num == 3 * 10 * 10);
    CHECK(t.upper_den == 12);
    CHECK(t.lower_bound == 5 * 3);  // b(t - b + 1)
    CHECK(t.sum_le_mid);
    CHECK(t.mid_le_upper);
    CHECK(t.sum_ge_lower);
}

TEST_CASE("replay_lemma_eh decomposition arithmetic") {
    ResidueSet a(Modulus(13), {1, 3, 4});
    ZnSet b = ZnSet::from_elements(Modulus(13),
                                   std::vector<uint32_t>{0, 1, 2, 3, 4, 5});
    LemmaEhTrace t = replay_lemma_eh(13, a, b);
    REQUIRE(t.ok);
    CHECK(t.t == 9);
    CHECK(t.m == 1);
    CHECK(t.r == 3);
    CHECK(parse_set_literal(t.c).size() == 10);
    CHECK(t.sum_le_mid);
    CHECK(t.sum_ge_lower);
}

TEST_CASE("replay_lemma_eh reports side-condition failures") {
    ResidueSet a(Modulus(11), {1, 2, 3});
    ZnSet small_b =
        ZnSet::from_elements(Modulus(11), std::vector<uint32_t>{0, 5});
    LemmaEhTrace t = replay_lemma_eh(11, a, small_b);
    CHECK_FALSE(t.ok);  // t+1 = 2 < |A*| = 7
    CHECK(t.side_condition.find("A*") != std::string::npos);

    ZnSet b1 = ZnSet::singleton(Modulus(11), 0);
    CHECK_FALSE(replay_lemma_eh(11, a, b1).ok);  // t = -1

    // hypothesis violations are errors, not traces
    ZnSet big_b = ZnSet::full(Modulus(11));
    CHECK_THROWS_AS(replay_lemma_eh(11, a, big_b), std::invalid_argument);
    CHECK_THROWS_AS(
        replay_lemma_eh(11, ResidueSet(Modulus(11), {1, 2, 10}), small_b),
        std::invalid_argument);  // A meets -A
    CHECK_THROWS_AS(
        replay_lemma_eh(11, ResidueSet(Modulus(11), {1, 2}), small_b),
        std::invalid_argument);  // |A| < 3
}

TEST_CASE("replay traces over random hypothesis-satisfying instances") {
    SplitMix64 g{271828};
    int done = 0;
    while (done < 60) {
        uint32_t n = 7 + uint32_t(bounded(g, 60));
        std::vector<std::pair<uint32_t, uint32_t>> pairs;
        for (uint32_t x = 1; 2 * x < n; ++x)
            if (std::gcd(x, n) == 1) pairs.emplace_back(x, n - x);
        if (pairs.size() < 3) continue;
        uint32_t s = 3 + uint32_t(bounded(g, pairs.size() - 2));
        auto pick = sample_distinct(g, uint32_t(pairs.size()), s);
        std::vector<uint32_t> elems;
        for (uint32_t i : pick)
            elems.push_back(bounded(g, 2) ? pairs[i].second : pairs[i].first);
        std::sort(elems.begin(), elems.end());
        ResidueSet a(Modulus(n), elems);

        uint32_t bmax = (n + 2) / 2;
        uint32_t bsz = std::min<uint32_t>(bmax, s + 2 + uint32_t(bounded(g, 5)));
        ZnSet b = ZnSet::from_elements(Modulus(n), sample_distinct(g, n, bsz));

        LemmaEhTrace t = replay_lemma_eh(n, a, b);
        if (!t.ok) continue;
        ++done;
        CHECK(t.t == 2 * int64_t(t.b) - 3);
        CHECK(uint64_t(t.t) == 2 * uint64_t(t.m) * t.a + t.r);
        CHECK(t.r <= 2 * t.a - 1);
        CHECK(t.layers_ok);          // the additive growth floor holds
        CHECK(t.sum_le_mid);         // counting bound from the layer structure
        CHECK(t.mid_le_upper);       // algebraic simplification
        CHECK(t.sum_ge_lower);       // the sum lower bound
        CHECK(parse_set_literal(t.c).size() == uint64_t(t.t) + 1);
    }
}

TEST_CASE("trace json shapes") {
    auto even = to_json(replay_main_proof(5, ResidueSet(Modulus(5), {1, 2, 3, 4})));
    CHECK(even["case"] == "even");
    CHECK(even["case_even"]["lhs"] == 25);
    auto odd = to_json(
        replay_main_proof(13, ResidueSet(Modulus(13), {1, 2, 3, 11, 12})));
    CHECK(odd["case"] == "odd");
    CHECK(odd["y"] == 3);

    ResidueSet a(Modulus(11), {1, 2, 3});
    ZnSet b = ZnSet::from_elements(Modulus(11),
                                   std::vector<uint32_t>{0, 1, 2, 3, 4});
    auto tr = to_json(replay_lemma_eh(11, a, b));
    CHECK(tr["ok"] == true);
    CHECK(tr["alpha"] == 3);
}
