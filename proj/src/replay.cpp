#include <algorithm>
#include <numeric>

#include "campaign_util.hpp"
#include "znsum/verify.hpp"

namespace znsum {

std::pair<ResidueSet, ResidueSet> antisymmetric_partition(const ResidueSet& a) {
    const uint32_t n = a.n();
    if (n < 3)
        throw std::invalid_argument("antisymmetric_partition requires n >= 3");
    if (!a.all_units())
        throw std::invalid_argument("antisymmetric_partition requires a unit set");

    const uint32_t k = a.size();
    const uint32_t target1 = (k + 1) / 2;
    std::vector<uint32_t> a1, a2, unpaired;
    for (uint32_t x : a.elements()) {
        uint32_t neg = n - x;  // x is a unit, so x != 0 and (n >= 3) x != neg
        if (a.contains(neg)) {
            if (x < neg) a1.push_back(x);
            else a2.push_back(x);
        } else {
            unpaired.push_back(x);
        }
    }
    // Fill the left half to its target in ascending order, rest go right.
    for (uint32_t x : unpaired) {
        if (a1.size() < target1) a1.push_back(x);
        else a2.push_back(x);
    }
    ResidueSet r1(a.modulus(), std::move(a1));
    ResidueSet r2(a.modulus(), std::move(a2));
    if (r1.size() != target1 || r2.size() != k - target1 ||
        !r1.antisymmetric() || !r2.antisymmetric())
        throw std::logic_error("partition postcondition failed");
    return {std::move(r1), std::move(r2)};
}

namespace {

uint32_t closure0_size(const ResidueSet& s) {
    return subset_sums(s).s0.count();
}

ResidueSet with_element(const ResidueSet& s, uint32_t x) {
    std::vector<uint32_t> elems(s.elements().begin(), s.elements().end());
    elems.push_back(x);
    return ResidueSet(s.modulus(), std::move(elems));
}

ResidueSet without_element(const ResidueSet& s, uint32_t x) {
    std::vector<uint32_t> elems;
    for (uint32_t e : s.elements())
        if (e != x) elems.push_back(e);
    return ResidueSet(s.modulus(), std::move(elems));
}

}  // namespace

MainProofTrace replay_main_proof(uint32_t n, const ResidueSet& a) {
    if (!(Modulus(n) == a.modulus()))
        throw std::invalid_argument("modulus mismatch");
    if (!a.all_units())
        throw std::invalid_argument("replay requires a unit set");
    if (a.size() < 4)
        throw std::invalid_argument("replay requires |A| >= 4");

    MainProofTrace tr;
    tr.n = n;
    tr.k = a.size();
    const uint64_t k = tr.k;
    tr.hypothesis_met = (k - 1) * (k - 1) + 16 > 4 * uint64_t(n);
    tr.premise_incomplete = !is_complete(a);

    auto [a1, a2] = antisymmetric_partition(a);
    tr.a1 = a1.literal();
    tr.a2 = a2.literal();
    tr.s0_a1 = closure0_size(a1);
    tr.s0_a2 = closure0_size(a2);

    const uint64_t fk = k / 2;
    tr.eq9_lhs = 6 + fk * (fk - 1);
    tr.eq9_rhs = uint64_t(n) + 2;
    tr.eq9_holds = tr.eq9_lhs < tr.eq9_rhs;
    tr.k_even = k % 2 == 0;

    if (tr.k_even) {
        tr.case_even_lhs = (k - 1) * (k - 1) + 16;
        tr.case_even_rhs = 4 * uint64_t(n);
        tr.case_even_contradiction = tr.case_even_lhs <= tr.case_even_rhs;
        return tr;
    }

    tr.half = uint32_t((k - 1) / 2);
    // Move the element of A1 with maximal translate escape against S_{A2}^0.
    ZnSet b = subset_sums(a2).s0;
    uint32_t best_y = a1[0], best_lam = 0;
    for (uint32_t y : a1.elements()) {
        uint32_t l = lambda(b, y);
        if (l > best_lam) {
            best_lam = l;
            best_y = y;
        }
    }
    tr.y = best_y;
    tr.lambda_y = best_lam;
    ResidueSet c1 = without_element(a1, best_y);
    ResidueSet c2 = with_element(a2, best_y);
    tr.c1 = c1.literal();
    tr.c2 = c2.literal();
    tr.s0_c1 = closure0_size(c1);
    tr.s0_c2 = closure0_size(c2);
    tr.pair_sum = uint64_t(tr.s0_c1) + tr.s0_c2;
    tr.pair_bound = uint64_t(n) + 1;
    tr.pair_within_bound = tr.pair_sum <= tr.pair_bound;
    return tr;
}

LemmaEhTrace replay_lemma_eh(uint32_t n, const ResidueSet& a, const ZnSet& b) {
    if (!(Modulus(n) == a.modulus()) || !(a.modulus() == b.modulus()))
        throw std::invalid_argument("modulus mismatch");
    if (a.empty() || b.empty())
        throw std::invalid_argument("replay requires nonempty A and B");
    if (!a.all_units())
        throw std::invalid_argument("replay requires a unit set");
    if (!a.antisymmetric())
        throw std::invalid_argument("replay requires A disjoint from -A");
    if (a.size() < 3)
        throw std::invalid_argument("replay requires |A| >= 3");
    if (2 * uint64_t(b.count()) > uint64_t(n) + 2)
        throw std::invalid_argument("replay requires 2|B| <= n+2");

    LemmaEhTrace tr;
    tr.n = n;
    tr.a = a.size();
    tr.b = b.count();
    tr.t = 2 * int64_t(tr.b) - 3;

    // A* = A u (-A) u {0}
    ZnSet a_star = a.to_set();
    a_star |= a_star.negated();
    a_star.set(0);
    tr.a_star = format_set_literal(a_star.elements());

    if (tr.t >= int64_t(n)) {
        tr.side_condition = "t >= n: the proof window does not fit the group";
        return tr;
    }
    if (tr.t + 1 < int64_t(a_star.count())) {
        tr.side_condition = "t+1 < |A*|: C cannot contain A*";
        return tr;
    }

    const uint32_t t = uint32_t(tr.t);
    tr.m = t / (2 * tr.a);
    tr.r = t % (2 * tr.a);

    // C_j = jA*; each grows by at least 2a per step while below n.
    std::vector<ZnSet> layers;
    layers.push_back(a_star);
    uint32_t top = tr.m + (tr.r > 0 ? 1 : 0);
    for (uint32_t j = 2; j <= top; ++j)
        layers.push_back(sumset(layers.back(), a_star));
    tr.layers_ok = true;
    for (uint32_t j = 1; j <= top; ++j) {
        uint32_t floor_j =
            std::min<uint64_t>(n, 2 * uint64_t(j) * tr.a + 1);
        tr.layer_sizes.push_back(layers[j - 1].count());
        tr.layer_floors.push_back(floor_j);
        if (layers[j - 1].count() < floor_j) tr.layers_ok = false;
    }

    // Build C: all of A*, then the lowest unused residues of each layer until
    // |C cap C_j| = 2ja+1, then r more from layer m+1.
    ZnSet c = a_star;
    for (uint32_t j = 2; j <= tr.m; ++j) {
        uint32_t want = 2 * j * tr.a + 1;
        for (uint32_t e : layers[j - 1].elements()) {
            if (c.count() >= want) break;
            if (!c.test(e)) c.set(e);
        }
        if (c.count() < want)
            throw std::logic_error("layer selection ran dry");
    }
    if (tr.r > 0) {
        uint32_t want = t + 1;
        for (uint32_t e : layers[top - 1].elements()) {
            if (c.count() >= want) break;
            if (!c.test(e)) c.set(e);
        }
        if (c.count() < want)
            throw std::logic_error("layer selection ran dry");
    }
    tr.c = format_set_literal(c.elements());

    uint32_t alpha = 0;
    for (uint32_t x : a.elements()) alpha = std::max(alpha, lambda(b, x));
    tr.alpha = alpha;

    uint64_t sum = 0;
    for (uint32_t e : c.elements())
        if (e != 0) sum += lambda(b, e);
    tr.sum_lambda = sum;

    tr.mid_bound = uint64_t(alpha) * (tr.m + 1) * (uint64_t(tr.m) * tr.a + tr.r);
    tr.upper_num = uint64_t(alpha) * (t + tr.a) * (t + tr.a);
    tr.upper_den = 4 * uint64_t(tr.a);
    tr.lower_bound = uint64_t(tr.b) * (t - tr.b + 1);

    tr.sum_le_mid = sum <= tr.mid_bound;
    // mid <= num/den, compared exactly by cross multiplication
    tr.mid_le_upper = (unsigned __int128)tr.mid_bound * tr.upper_den <=
                      (unsigned __int128)tr.upper_num;
    tr.sum_ge_lower = sum >= tr.lower_bound;
    tr.ok = true;
    return tr;
}

json to_json(const MainProofTrace& t) {
    json out{{"proof", "main"},
             {"n", t.n},
             {"k", t.k},
             {"hypothesis_met", t.hypothesis_met},
             {"premise_incomplete", t.premise_incomplete},
             {"A1", t.a1},
             {"A2", t.a2},
             {"s0_A1", t.s0_a1},
             {"s0_A2", t.s0_a2},
             {"eq9", {{"lhs", t.eq9_lhs}, {"rhs", t.eq9_rhs}, {"holds", t.eq9_holds}}},
             {"case", t.k_even ? "even" : "odd"}};
    if (t.k_even) {
        out["case_even"] = {{"lhs", t.case_even_lhs},
                            {"rhs", t.case_even_rhs},
                            {"contradiction", t.case_even_contradiction}};
    } else {
        out["half"] = t.half;
        out["y"] = t.y;
        out["lambda_y"] = t.lambda_y;
        out["C1"] = t.c1;
        out["C2"] = t.c2;
        out["s0_C1"] = t.s0_c1;
        out["s0_C2"] = t.s0_c2;
        out["pair_sum"] = t.pair_sum;
        out["pair_bound"] = t.pair_bound;
        out["pair_within_bound"] = t.pair_within_bound;
    }
    return out;
}

json to_json(const LemmaEhTrace& t) {
    json out{{"proof", "lemma_eh"}, {"n", t.n},   {"a", t.a},
             {"b", t.b},            {"t", t.t},   {"ok", t.ok},
             {"A_star", t.a_star}};
    if (!t.ok) {
        out["side_condition"] = t.side_condition;
        return out;
    }
    out["m"] = t.m;
    out["r"] = t.r;
    out["layer_sizes"] = t.layer_sizes;
    out["layer_floors"] = t.layer_floors;
    out["layers_ok"] = t.layers_ok;
    out["C"] = t.c;
    out["alpha"] = t.alpha;
    out["sum_lambda"] = t.sum_lambda;
    out["mid_bound"] = t.mid_bound;
    out["upper_bound"] = {{"num", t.upper_num}, {"den", t.upper_den}};
    out["lower_bound"] = t.lower_bound;
    out["sum_le_mid"] = t.sum_le_mid;
    out["mid_le_upper"] = t.mid_le_upper;
    out["sum_ge_lower"] = t.sum_ge_lower;
    return out;
}

namespace {

/// Independent oracle: enumerates all 2^|A| subsets with a Gray-code walk,
/// maintaining the running sum. Used to revalidate witnesses without touching
/// the rotate-fold path.
struct BruteClosure {
    std::vector<char> s;          // nonempty subset sums
    std::vector<char> by_size_hit;  // by_size_hit[c*n + r]
    uint32_t n;

    BruteClosure(uint32_t n_in, std::span<const uint32_t> elems, bool layers)
        : s(n_in, 0), n(n_in) {
        const uint32_t a = uint32_t(elems.size());
        if (a > 24) throw std::invalid_argument("brute oracle limited to |A| <= 24");
        if (layers) by_size_hit.assign(size_t(a + 1) * n, 0);
        uint32_t sum = 0, cnt = 0;
        uint64_t gray = 0;
        for (uint64_t t = 1; t < (uint64_t(1) << a); ++t) {
            uint32_t j = uint32_t(std::countr_zero(t));
            uint64_t bit = uint64_t(1) << j;
            gray ^= bit;
            if (gray & bit) {
                sum += elems[j];
                if (sum >= n) sum -= n;
                ++cnt;
            } else {
                sum = sum >= elems[j] ? sum - elems[j] : sum + n - elems[j];
                --cnt;
            }
            s[sum] = 1;
            if (layers) by_size_hit[size_t(cnt) * n + sum] = 1;
        }
    }

    uint32_t s_size() const {
        return uint32_t(std::count(s.begin(), s.end(), char(1)));
    }
    uint32_t s0_size() const { return s_size() + (s[0] ? 0 : 1); }
    uint32_t layer_size(uint32_t k) const {
        if (k == 0) return 1;
        uint32_t c = 0;
        for (uint32_t r = 0; r < n; ++r) c += by_size_hit[size_t(k) * n + r];
        return c;
    }
};

uint32_t brute_lambda(uint32_t n, std::span<const uint32_t> b, uint32_t x) {
    std::vector<char> in(n, 0);
    for (uint32_t e : b) in[e] = 1;
    uint32_t cnt = 0;
    for (uint32_t e : b) {
        uint32_t shifted = e + x >= n ? e + x - n : e + x;
        if (!in[shifted]) ++cnt;
    }
    return cnt;
}

std::vector<uint32_t> parsed(const Witness& w, const std::string& name) {
    return parse_set_literal(w.set(name));
}

uint32_t parsed_residue(const Witness& w, const std::string& name) {
    auto v = parse_set_literal(w.set(name));
    if (v.size() != 1) throw std::invalid_argument("expected a single residue");
    return v[0];
}

bool relation_fails(std::string_view rel, int64_t lhs, int64_t rhs) {
    if (rel == "==") return lhs != rhs;
    if (rel == ">=") return lhs < rhs;
    if (rel == "<=") return lhs > rhs;
    if (rel == ">") return lhs <= rhs;
    if (rel == "<") return lhs >= rhs;
    throw std::invalid_argument("unknown relation");
}

uint32_t brute_s0_size(uint32_t n, std::span<const uint32_t> elems) {
    if (elems.empty()) return 1;
    return BruteClosure(n, elems, false).s0_size();
}

}  // namespace

bool revalidate_witness(const Witness& w) {
    const uint32_t n = w.n;
    int64_t lhs = 0, rhs = 0;

    if (w.claim_id == "thm1") {
        auto a = parsed(w, "A");
        BruteClosure bc(n, a, false);
        lhs = bc.s_size();
        rhs = subgroup_generated(ResidueSet(Modulus(n), a)).count();
    } else if (w.claim_id == "conj2") {
        auto a = parsed(w, "A");
        uint32_t k = conjecture_params(n).k;
        BruteClosure bc(n, a, true);
        lhs = bc.layer_size(k);
        rhs = n;
    } else if (w.claim_id == "chowla") {
        auto xs = parsed(w, "X");
        auto ys = parsed(w, "Y");
        std::vector<char> hit(n, 0);
        for (uint32_t x : xs)
            for (uint32_t y : ys) hit[(x + y) % n] = 1;
        lhs = std::count(hit.begin(), hit.end(), char(1));
        rhs = chowla_bound(n, uint32_t(xs.size()), uint32_t(ys.size()));
    } else if (w.claim_id == "eq1") {
        auto yv = parsed(w, "Y");
        uint32_t y = parsed_residue(w, "y");
        BruteClosure bc(n, yv, false);
        std::vector<uint32_t> b_elems;
        for (uint32_t r = 0; r < n; ++r)
            if (bc.s[r] || r == 0) b_elems.push_back(r);
        std::vector<uint32_t> rest;
        for (uint32_t e : yv)
            if (e != y) rest.push_back(e);
        lhs = int64_t(b_elems.size());
        rhs = int64_t(brute_s0_size(n, rest)) + brute_lambda(n, b_elems, y);
    } else if (w.claim_id == "eq2") {
        auto yv = parsed(w, "Y");
        uint32_t z = parsed_residue(w, "z");
        BruteClosure bc(n, yv, false);
        std::vector<uint32_t> b_elems;
        for (uint32_t r = 0; r < n; ++r)
            if (bc.s[r] || r == 0) b_elems.push_back(r);
        std::vector<uint32_t> ext = yv;
        ext.push_back(z);
        lhs = brute_s0_size(n, ext);
        rhs = int64_t(b_elems.size()) + brute_lambda(n, b_elems, z);
    } else if (w.claim_id == "eq3") {
        auto b = parsed(w, "B");
        uint32_t x = parsed_residue(w, "x");
        lhs = brute_lambda(n, b, x);
        rhs = brute_lambda(n, b, x == 0 ? 0 : n - x);
    } else if (w.claim_id == "eq4") {
        auto b = parsed(w, "B");
        uint32_t x = parsed_residue(w, "x");
        uint32_t y = parsed_residue(w, "y");
        lhs = brute_lambda(n, b, (x + y) % n);
        rhs = int64_t(brute_lambda(n, b, x)) + brute_lambda(n, b, y);
    } else if (w.claim_id == "eq5") {
        auto b = parsed(w, "B");
        auto c = parsed(w, "C");
        int64_t sum = 0;
        for (uint32_t x : c) sum += brute_lambda(n, b, x);
        lhs = sum;
        rhs = int64_t(b.size()) * (int64_t(c.size()) - int64_t(b.size()) + 1);
    } else if (w.claim_id == "eq6" || w.claim_id == "eq7") {
        auto a = parsed(w, "A");
        auto b = parsed(w, "B");
        uint32_t alpha = 0;
        for (uint32_t x : a) alpha = std::max(alpha, brute_lambda(n, b, x));
        if (w.claim_id == "eq6") {
            lhs = int64_t(alpha) * int64_t(b.size());
            rhs = int64_t(a.size()) *
                  (int64_t(b.size()) - int64_t(a.size()) + 3);
        } else {
            lhs = alpha;
            rhs = int64_t(a.size()) - 1;
        }
    } else if (w.claim_id == "mainlemma") {
        auto a = parsed(w, "A");
        lhs = 2 * int64_t(brute_s0_size(n, a));
        rhs = std::min<int64_t>(int64_t(n) + 2,
                                6 + int64_t(a.size()) * (int64_t(a.size()) - 1));
    } else if (w.claim_id == "eq8") {
        auto xs = parsed(w, "X");
        auto ys = parsed(w, "Y");
        lhs = int64_t(brute_s0_size(n, xs)) + brute_s0_size(n, ys);
        rhs = int64_t(n) + 1;
    } else {
        throw std::invalid_argument("unknown claim id: " + w.claim_id);
    }

    return lhs == w.lhs && rhs == w.rhs && relation_fails(w.relation, lhs, rhs);
}

}  // namespace znsum
