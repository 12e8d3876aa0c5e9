#include <doctest.h>

#include <numeric>

#include "oracle.hpp"
#include "znsum/verify.hpp"

using namespace znsum;

namespace {

CampaignConfig exhaustive(uint32_t jobs = 2) {
    CampaignConfig cfg;
    cfg.mode = Mode::exhaustive;
    cfg.jobs = jobs;
    return cfg;
}

CampaignConfig sampled(uint64_t trials, uint64_t seed, uint32_t jobs = 2) {
    CampaignConfig cfg;
    cfg.mode = Mode::sampled;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.jobs = jobs;
    return cfg;
}

uint64_t pow3(uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= 3;
    return r;
}

}  // namespace

TEST_CASE("verify_theorem small exhaustive runs") {
    auto r5 = verify_theorem(5, exhaustive());
    CHECK(r5.instances_tested == 1);
    CHECK(r5.violations.empty());
    CHECK(r5.params["threshold"] == 4);

    auto r7 = verify_theorem(7, exhaustive());
    CHECK(r7.params["threshold"] == 5);
    CHECK(r7.instances_tested == 6);  // C(6,5)
    CHECK(r7.violations.empty());

    auto r9 = verify_theorem(9, exhaustive());
    CHECK(r9.instances_tested == 1);  // C(6,6)
    CHECK(r9.violations.empty());

    auto r6 = verify_theorem(6, exhaustive());
    CHECK(r6.params["vacuous"] == true);
    CHECK(r6.instances_tested == 0);

    CHECK_THROWS_AS(verify_theorem(4, exhaustive()), std::invalid_argument);
}

TEST_CASE("verify_theorem instance counts match the binomial slice") {
    for (uint32_t n = 5; n <= 20; ++n) {
        auto rep = verify_theorem(n, exhaustive());
        uint32_t m = main_threshold(n);
        uint32_t phi = euler_phi(n);
        if (m > phi) {
            CHECK(rep.instances_tested == 0);
        } else {
            CHECK(rep.instances_tested == binomial_capped(phi, m));
            CHECK(rep.violations.empty());
        }
    }
}

TEST_CASE("verify_theorem rank ranges partition the campaign") {
    // n = 13: threshold 8, C(12,8) = 495
    uint32_t n = 13;
    uint32_t m = main_threshold(n);
    CHECK(m == 8);
    uint64_t space = binomial_capped(euler_phi(n), m);
    CHECK(space == 495);

    auto whole = verify_theorem(n, exhaustive());
    uint64_t pieces = 0;
    for (auto [lo, hi] : std::vector<std::pair<uint64_t, uint64_t>>{
             {0, 100}, {100, 400}, {400, 495}}) {
        CampaignConfig cfg = exhaustive();
        cfg.rank_range = {lo, hi};
        auto part = verify_theorem(n, cfg);
        pieces += part.instances_tested;
        CHECK(part.violations.empty());
    }
    CHECK(pieces == whole.instances_tested);

    CampaignConfig bad = exhaustive();
    bad.rank_range = {0, space + 1};
    CHECK_THROWS_AS(verify_theorem(n, bad), std::invalid_argument);
}

TEST_CASE("verify_theorem budget guard") {
    CampaignConfig cfg = exhaustive();
    cfg.budget = 10;
    CHECK_THROWS_AS(verify_theorem(13, cfg), BudgetError);  // 495 > 10
    cfg.budget_override = true;
    CHECK(verify_theorem(13, cfg).instances_tested == 495);
}

TEST_CASE("verify_theorem sampled determinism across jobs") {
    CHECK_THROWS_AS(verify_theorem(50, sampled(0, 1)), std::invalid_argument);
    auto a = to_json_stable(verify_theorem(50, sampled(3000, 99, 1)));
    auto b = to_json_stable(verify_theorem(50, sampled(3000, 99, 2)));
    auto c = to_json_stable(verify_theorem(50, sampled(3000, 99, 5)));
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("check_conjecture small runs") {
    auto r5 = check_conjecture(5, exhaustive());
    CHECK(r5.params["k"] == 2);
    CHECK(r5.params["min_size"] == 4);
    CHECK(r5.instances_tested == 1);
    CHECK(r5.violations.empty());

    auto r7 = check_conjecture(7, exhaustive());
    CHECK(r7.params["k"] == 3);
    CHECK(r7.params["min_size"] == 5);
    CHECK(r7.instances_tested == 6);
    CHECK(r7.violations.empty());

    auto r6 = check_conjecture(6, exhaustive());
    CHECK(r6.params["vacuous"] == true);

    CHECK_THROWS_AS(check_conjecture(4, exhaustive()), std::invalid_argument);
}

TEST_CASE("check_conjecture reports the composite counterexample at n = 9") {
    // The full unit set mod 9 misses 0 as a 3-element sum: every unit is
    // +-1, +-2, or +-4, and no three distinct ones cancel mod 9.
    auto rep = check_conjecture(9, exhaustive());
    CHECK(rep.instances_tested == 1);
    REQUIRE(rep.violations.size() == 1);
    const Witness& w = rep.violations[0];
    CHECK(w.set("A") == "1,2,4,5,7,8");
    CHECK(w.lhs == 8);
    CHECK(w.rhs == 9);
    CHECK(revalidate_witness(w));
}

TEST_CASE("check_conjecture matches brute-force layers where it runs") {
    for (uint32_t n : {5u, 7u, 9u, 11u, 13u}) {
        auto rep = check_conjecture(n, exhaustive());
        uint32_t k = conjecture_params(n).k;
        uint32_t m = conjecture_params(n).min_size;
        if (rep.params.contains("vacuous")) continue;
        // recount violations independently
        std::vector<uint32_t> pool = units(Modulus(n)).elements();
        auto stream = enumerate_subsets(ResidueSet(Modulus(n), pool), m, 0,
                                        binomial_capped(pool.size(), m));
        uint64_t bad = 0;
        while (auto a = stream.next()) {
            auto want = oracle::closures(n, a->elements());
            if (oracle::count(want.layers[k]) != n) ++bad;
        }
        CHECK(rep.violations.size() == bad);
    }
}

TEST_CASE("audit_chowla exhaustive is clean with exact counts") {
    for (uint32_t n = 2; n <= 9; ++n) {
        auto rep = audit_chowla(n, exhaustive());
        uint64_t want =
            ((uint64_t(1) << n) - 1) * (uint64_t(1) << euler_phi(n));
        CHECK(rep.instances_tested == want);
        CHECK(rep.violations.empty());
    }
}

TEST_CASE("audit_chowla sampled determinism and cleanliness") {
    auto a = to_json_stable(audit_chowla(300, sampled(4000, 123, 1)));
    auto b = to_json_stable(audit_chowla(300, sampled(4000, 123, 3)));
    CHECK(a == b);
    CHECK(a["violations"].empty());
}

TEST_CASE("audit_olson_identities exhaustive is clean with exact counts") {
    for (uint32_t n = 2; n <= 8; ++n) {
        auto rep = audit_olson_identities(n, exhaustive());
        uint64_t y_space = (uint64_t(1) << (n - 1)) - 1;
        uint64_t b_space = (uint64_t(1) << n) - 1;
        uint64_t want = y_space * n + b_space * (uint64_t(n) + uint64_t(n) * n) +
                        b_space * y_space;
        CHECK(rep.instances_tested == want);
        CHECK(rep.violations.empty());
    }
}

TEST_CASE("closure growth identity on the worked instance") {
    // |S_{1,2}^0| mod 5 = 4 = |S_{1}^0| + lambda_{S_1^0}(2)
    ResidueSet y1(Modulus(5), {1});
    auto b = subset_sums(y1).s0;
    CHECK(b.count() == 2);
    CHECK(lambda(b, 2) == 2);
    CHECK(subset_sums(ResidueSet(Modulus(5), {1, 2})).s0.count() == 4);
}

TEST_CASE("sum bound is tight on the worked instance") {
    // B = {0,1}, C = {1,2,3,4} mod 5: sum of escapes = 6 = |B|(|C|-|B|+1)
    ZnSet b = ZnSet::from_elements(Modulus(5), std::vector<uint32_t>{0, 1});
    uint32_t sum = 0;
    for (uint32_t x : {1u, 2u, 3u, 4u}) sum += lambda(b, x);
    CHECK(sum == 6);
    CHECK(sum == 2 * (4 - 2 + 1));
}

TEST_CASE("audit_olson sampled determinism") {
    auto a = to_json_stable(audit_olson_identities(200, sampled(2000, 7, 1)));
    auto b = to_json_stable(audit_olson_identities(200, sampled(2000, 7, 4)));
    CHECK(a == b);
    CHECK(a["violations"].empty());
}

TEST_CASE("audit_lemma_eh reproduces the printed-bound failures as findings") {
    auto rep = audit_lemma_eh(11, exhaustive());
    CHECK(rep.violations.empty());  // findings are exit-code-neutral

    // instance space: antisymmetric unit A of size >= 3 x nonempty B with
    // 2|B| <= n+2
    uint64_t a_count = 0;
    for (uint32_t s = 3; s <= 5; ++s)
        a_count += binomial_capped(5, s) << s;
    uint64_t b_count = 0;
    for (uint32_t b = 1; b <= 6; ++b) b_count += binomial_capped(11, b);
    CHECK(rep.instances_tested == a_count * b_count);

    bool named_eq6 = false, degenerate_eq6 = false, eq7_counterexample = false;
    for (const Witness& w : rep.findings) {
        if (w.claim_id == "eq6" && w.set("A") == "1,2,3" &&
            w.set("B") == "0,1,2,3,4") {
            named_eq6 = true;
            CHECK(w.lhs == 15);  // alpha * b with alpha = 3
            CHECK(w.rhs == 15);  // a(b - a + 3)
        }
        if (w.claim_id == "eq6" && w.set("A") == "1,2,3" && w.set("B") == "0")
            degenerate_eq6 = true;
        if (w.claim_id == "eq7" && w.set("A") == "1,2,3,4" &&
            w.set("B") == "0,1")
            eq7_counterexample = true;
    }
    CHECK(named_eq6);
    CHECK(degenerate_eq6);
    // The a-1 corollary inherits the failure where the strict bound breaks:
    // alpha = 2 < 3 for A = {1,2,3,4}, B = {0,1}.
    CHECK(eq7_counterexample);

    for (const Witness& w : rep.findings) CHECK(revalidate_witness(w));
}

TEST_CASE("audit_lemma_eh alpha agrees with direct evaluation") {
    ZnSet b = ZnSet::from_elements(Modulus(11),
                                   std::vector<uint32_t>{0, 2, 4, 6, 8});
    uint32_t alpha = 0;
    for (uint32_t x : {1u, 2u, 3u})
        alpha = std::max(alpha, lambda(b, x));
    CHECK(alpha == oracle::lambda(11, std::vector<uint32_t>{0, 2, 4, 6, 8}, 1));
    // strict bound: alpha*5 > 3*(5-3+3) = 15
    CHECK(lamb_bound_holds(3, 5, alpha) == (alpha * 5 > 15));
}

TEST_CASE("audit_lemma_eh sampled determinism") {
    auto a = to_json_stable(audit_lemma_eh(23, sampled(3000, 11, 1)));
    auto b = to_json_stable(audit_lemma_eh(23, sampled(3000, 11, 3)));
    CHECK(a == b);
}

TEST_CASE("audit_mainlemma exhaustive is clean with exact counts") {
    for (uint32_t n = 3; n <= 24; ++n) {
        auto rep = audit_mainlemma(n, exhaustive());
        uint32_t p = 0;
        for (uint32_t x = 1; 2 * x < n; ++x)
            if (std::gcd(x, n) == 1) ++p;
        uint64_t want = 0;
        for (uint32_t s = 2; s <= p; ++s)
            want += binomial_capped(p, s) << s;
        CHECK(rep.instances_tested == want);
        CHECK(rep.violations.empty());
    }
}

TEST_CASE("subset-sum size bound on the worked instances") {
    CHECK(subset_sums(ResidueSet(Modulus(7), {1, 2})).s0.count() == 4);
    CHECK(mainlemma_bound_holds(7, 2, 4));
    CHECK(subset_sums(ResidueSet(Modulus(5), {2, 4})).s0.count() == 4);
    CHECK(mainlemma_bound_holds(5, 2, 4));
}

TEST_CASE("audit_final_inequality exhaustive is clean and counts add up") {
    for (uint32_t n = 2; n <= 12; ++n) {
        auto rep = audit_final_inequality(n, exhaustive());
        CHECK(rep.violations.empty());

        // recompute the space: ordered disjoint nonempty pairs inside every
        // incomplete unit subset
        std::vector<uint32_t> pool = units(Modulus(n)).elements();
        uint64_t want = 0, incomplete = 0;
        for (uint64_t mask = 1; mask < (uint64_t(1) << pool.size()); ++mask) {
            std::vector<uint32_t> elems;
            for (uint32_t i = 0; i < pool.size(); ++i)
                if (mask >> i & 1) elems.push_back(pool[i]);
            if (is_complete(ResidueSet(Modulus(n), elems))) continue;
            ++incomplete;
            uint32_t a = uint32_t(elems.size());
            want += pow3(a) - 2 * (uint64_t(1) << a) + 1;
        }
        CHECK(rep.instances_tested == want);
        CHECK(rep.params["incomplete_sets"] == incomplete);
    }
}

TEST_CASE("final inequality worked instances") {
    CHECK(subset_sums(ResidueSet(Modulus(5), {1})).s0.count() +
              subset_sums(ResidueSet(Modulus(5), {2})).s0.count() <=
          6);
    CHECK(subset_sums(ResidueSet(Modulus(4), {1})).s0.count() +
              subset_sums(ResidueSet(Modulus(4), {3})).s0.count() <=
          5);
}

TEST_CASE("max_incomplete_size examples") {
    auto r5 = max_incomplete_size(5);
    CHECK(r5.size == 2);
    CHECK(r5.witness.literal() == "1,2");

    auto r4 = max_incomplete_size(4);
    CHECK(r4.size == 2);
    CHECK(r4.witness.literal() == "1,3");

    auto r3 = max_incomplete_size(3);
    CHECK(r3.size == 1);
    CHECK(r3.witness.literal() == "1");

    CHECK_THROWS_AS(max_incomplete_size(101, 1000, false), BudgetError);
}

TEST_CASE("max_incomplete witnesses really are incomplete and maximal") {
    for (uint32_t n = 3; n <= 16; ++n) {
        auto r = max_incomplete_size(n);
        CHECK_FALSE(is_complete(r.witness));
        // no incomplete set exists at any larger size
        std::vector<uint32_t> pool = units(Modulus(n)).elements();
        for (uint64_t mask = 1; mask < (uint64_t(1) << pool.size()); ++mask) {
            if (std::popcount(mask) <= r.size) continue;
            std::vector<uint32_t> elems;
            for (uint32_t i = 0; i < pool.size(); ++i)
                if (mask >> i & 1) elems.push_back(pool[i]);
            CHECK(is_complete(ResidueSet(Modulus(n), elems)));
        }
    }
}

TEST_CASE("witness revalidation rejects tampered values") {
    auto rep = check_conjecture(9, exhaustive());
    REQUIRE(rep.violations.size() == 1);
    Witness w = rep.violations[0];
    CHECK(revalidate_witness(w));
    Witness tampered = w;
    tampered.lhs += 1;
    CHECK_FALSE(revalidate_witness(tampered));
    Witness satisfied = w;
    satisfied.lhs = satisfied.rhs;  // claims n sums; relation no longer fails
    CHECK_FALSE(revalidate_witness(satisfied));
}

TEST_CASE("campaign reports carry their configuration") {
    auto rep = audit_chowla(6, exhaustive());
    CHECK(rep.check_id == "chowla");
    CHECK(rep.n == 6);
    CHECK(rep.mode == "exhaustive");
    CHECK_FALSE(rep.seed.has_value());

    auto s = audit_chowla(6, sampled(50, 9));
    CHECK(s.seed.has_value());
    CHECK(*s.seed == 9);
    CHECK(s.instances_tested == 50);
}
