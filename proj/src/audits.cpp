#include <numeric>

#include "campaign_util.hpp"
#include "znsum/verify.hpp"

// Auditors for the translate-escape lower bounds, the subset-sum size bound,
// the disjoint-closure inequality, and the incompleteness probe.

namespace znsum {

using detail::Partial;
using detail::Stopwatch;

namespace {

/// Iterates the combinations of [0, pool) of sizes smin..smax as one flat
/// index space, size-major, colex within a size.
struct SizedComboSpace {
    uint32_t pool, smin, smax;
    std::vector<uint64_t> base;  // base[s] = first flat index of size s
    uint64_t total = 0;

    SizedComboSpace(uint32_t pool_in, uint32_t smin_in, uint32_t smax_in)
        : pool(pool_in), smin(smin_in), smax(smax_in) {
        base.assign(smax + 2, 0);
        uint64_t acc = 0;
        for (uint32_t s = smin; s <= smax; ++s) {
            base[s] = acc;
            acc += binomial_capped(pool, s);
        }
        base[smax + 1] = acc;
        total = acc;
    }

    struct Iter {
        const SizedComboSpace* sp = nullptr;
        uint32_t size = 0;
        std::vector<uint32_t> idx;

        void init(uint64_t off) {
            size = sp->smin;
            while (size < sp->smax && sp->base[size + 1] <= off) ++size;
            idx = colex_unrank(off - sp->base[size], size, sp->pool);
        }
        void advance() {
            if (!colex_next(idx, sp->pool)) {
                ++size;
                idx.resize(size);
                for (uint32_t i = 0; i < size; ++i) idx[i] = i;
            }
        }
    };

    Iter iter_at(uint64_t off) const {
        Iter it{this};
        it.init(off);
        return it;
    }
};

uint64_t elems_to_mask64(std::span<const uint32_t> xs) {
    uint64_t m = 0;
    for (uint32_t x : xs) m |= uint64_t(1) << x;
    return m;
}

struct LambdaEval {
    uint32_t n;
    bool small;
    uint64_t full;
    ZnSet bset;

    explicit LambdaEval(Modulus mod)
        : n(mod.value()),
          small(n <= 64),
          full(small ? detail::full_mask(n) : 0),
          bset(mod) {}

    /// max over x in A of |(B+x) \ B|, with B given as sorted elements.
    uint32_t alpha(std::span<const uint32_t> a_elems,
                   std::span<const uint32_t> b_elems) {
        uint32_t best = 0;
        if (small) {
            uint64_t bm = elems_to_mask64(b_elems);
            for (uint32_t x : a_elems)
                best = std::max(best, detail::lambda_mask(bm, x, n, full));
        } else {
            bset.clear();
            for (uint32_t v : b_elems) bset.set(v);
            for (uint32_t x : a_elems) best = std::max(best, lambda(bset, x));
        }
        return best;
    }
};

void eval_lemma_eh(uint32_t n, std::span<const uint32_t> a_elems,
                   std::span<const uint32_t> b_elems, LambdaEval& ev,
                   Partial& part) {
    const uint32_t a = uint32_t(a_elems.size());
    const uint32_t b = uint32_t(b_elems.size());
    const uint32_t alpha = ev.alpha(a_elems, b_elems);
    std::string a_lit, b_lit;
    auto lits = [&] {
        if (a_lit.empty()) {
            a_lit = format_set_literal(a_elems);
            b_lit = format_set_literal(b_elems);
        }
    };
    if (!lamb_bound_holds(a, b, alpha)) {
        lits();
        part.findings.push_back(Witness{n,
                                        "eq6",
                                        {{"A", a_lit}, {"B", b_lit}},
                                        int64_t(alpha) * b,
                                        int64_t(a) * (int64_t(b) - a + 3),
                                        ">"});
    }
    if (2 * uint64_t(b) >= uint64_t(a) * (a - 3) && alpha + 1 < a) {
        lits();
        part.findings.push_back(Witness{n,
                                        "eq7",
                                        {{"A", a_lit}, {"B", b_lit}},
                                        int64_t(alpha),
                                        int64_t(a) - 1,
                                        ">="});
    }
    ++part.tested;
}

void count_findings(AuditReport& rep) {
    uint64_t eq6 = 0, eq7 = 0;
    for (const auto& w : rep.findings) {
        if (w.claim_id == "eq6") ++eq6;
        if (w.claim_id == "eq7") ++eq7;
    }
    rep.params["eq6_findings"] = eq6;
    rep.params["eq7_findings"] = eq7;
}

void finish_report(AuditReport& rep, Partial&& merged, const Stopwatch& sw) {
    rep.instances_tested = merged.tested;
    rep.violations = std::move(merged.violations);
    rep.findings = std::move(merged.findings);
    canonicalize(rep.violations);
    canonicalize(rep.findings);
    rep.violations.erase(
        std::unique(rep.violations.begin(), rep.violations.end()),
        rep.violations.end());
    rep.findings.erase(std::unique(rep.findings.begin(), rep.findings.end()),
                       rep.findings.end());
    rep.elapsed_ms = sw.ms();
}

}  // namespace

AuditReport audit_lemma_eh(uint32_t n, const CampaignConfig& cfg) {
    Stopwatch sw;
    const Modulus mod(n);
    AuditReport rep;
    rep.check_id = "lemma_eh";
    rep.n = n;
    rep.mode = std::string(mode_name(cfg.mode));
    if (cfg.mode == Mode::sampled) {
        if (cfg.trials == 0)
            throw std::invalid_argument("sampled mode requires trials >= 1");
        rep.seed = cfg.seed;
    }

    const uint32_t bmax = (n + 2) / 2;
    const detail::AntisymSpace aspace(n, 3);
    rep.params["a_space"] = aspace.total;
    if (aspace.total == 0) {
        rep.params["vacuous"] = true;
        rep.elapsed_ms = sw.ms();
        return rep;
    }

    if (cfg.mode == Mode::exhaustive) {
        const SizedComboSpace bspace(n, 1, bmax);
        rep.params["b_space"] = bspace.total;
        unsigned __int128 total128 =
            (unsigned __int128)aspace.total * bspace.total;
        uint64_t total = detail::sat_u64(total128);
        rep.params["space"] = total;
        detail::check_budget(total, cfg);

        auto merged = detail::run_parallel(
            total, cfg.jobs, [&](uint64_t clo, uint64_t chi, Partial& part) {
                LambdaEval ev(mod);
                uint64_t a_idx = clo / bspace.total;
                uint64_t b_off = clo % bspace.total;
                uint64_t remaining = chi - clo;
                while (remaining) {
                    std::vector<uint32_t> a_elems = aspace.decode(a_idx);
                    auto it = bspace.iter_at(b_off);
                    while (remaining && b_off < bspace.total) {
                        eval_lemma_eh(n, a_elems, it.idx, ev, part);
                        --remaining;
                        ++b_off;
                        if (b_off < bspace.total) it.advance();
                    }
                    ++a_idx;
                    b_off = 0;
                }
            });
        finish_report(rep, std::move(merged), sw);
    } else {
        auto merged = detail::run_parallel(
            cfg.trials, cfg.jobs, [&](uint64_t t0, uint64_t t1, Partial& part) {
                LambdaEval ev(mod);
                std::vector<uint32_t> b_elems;
                for (uint64_t t = t0; t < t1; ++t) {
                    SplitMix64 g{substream_seed(cfg.seed, t)};
                    std::vector<uint32_t> a_elems = aspace.sample(g);
                    uint32_t b = 1 + uint32_t(bounded(g, bmax));
                    detail::sample_elems(g, n, b, b_elems);
                    eval_lemma_eh(n, a_elems, b_elems, ev, part);
                }
            });
        finish_report(rep, std::move(merged), sw);
    }
    count_findings(rep);
    return rep;
}

namespace {

struct Closure0Eval {
    uint32_t n;
    bool small;
    uint64_t full;
    ZnSet s, scratch;

    explicit Closure0Eval(Modulus mod)
        : n(mod.value()),
          small(n <= 64),
          full(small ? detail::full_mask(n) : 0),
          s(mod),
          scratch(mod) {}

    uint32_t size(std::span<const uint32_t> elems) {
        if (small)
            return uint32_t(std::popcount(
                detail::closure0_mask(elems_to_mask64(elems), n, full)));
        s.clear();
        s.set(0);
        for (uint32_t x : elems) {
            scratch.clear();
            scratch.or_with_rotated(s, x);
            s |= scratch;
        }
        return s.count();
    }

    /// S_A saturation test for unit sets (complete <=> S_A = Z_n).
    bool complete_units(std::span<const uint32_t> elems) {
        if (small) {
            uint64_t sm = 0;
            for (uint32_t x : elems) {
                sm = sm | detail::rot_mask(sm, x, n, full) | (uint64_t(1) << x);
                if (sm == full) return true;
            }
            return false;
        }
        s.clear();
        for (uint32_t x : elems) {
            scratch.clear();
            scratch.or_with_rotated(s, x);
            s |= scratch;
            s.set(x);
            if (s.count() == n) return true;
        }
        return false;
    }
};

}  // namespace

AuditReport audit_mainlemma(uint32_t n, const CampaignConfig& cfg) {
    Stopwatch sw;
    const Modulus mod(n);
    AuditReport rep;
    rep.check_id = "mainlemma";
    rep.n = n;
    rep.mode = std::string(mode_name(cfg.mode));
    if (cfg.mode == Mode::sampled) {
        if (cfg.trials == 0)
            throw std::invalid_argument("sampled mode requires trials >= 1");
        rep.seed = cfg.seed;
    }

    const detail::AntisymSpace aspace(n, 2);
    rep.params["a_space"] = aspace.total;
    if (aspace.total == 0) {
        rep.params["vacuous"] = true;
        rep.elapsed_ms = sw.ms();
        return rep;
    }

    auto eval = [&](std::span<const uint32_t> elems, Closure0Eval& ev,
                    Partial& part) {
        const uint32_t a = uint32_t(elems.size());
        const uint32_t s0 = ev.size(elems);
        if (!mainlemma_bound_holds(n, a, s0)) {
            int64_t rhs = std::min<int64_t>(int64_t(n) + 2,
                                            6 + int64_t(a) * (a - 1));
            part.violations.push_back(Witness{n,
                                              "mainlemma",
                                              {{"A", format_set_literal(elems)}},
                                              2 * int64_t(s0),
                                              rhs,
                                              ">="});
        }
        ++part.tested;
    };

    if (cfg.mode == Mode::exhaustive) {
        rep.params["space"] = aspace.total;
        detail::check_budget(aspace.total, cfg);
        auto merged = detail::run_parallel(
            aspace.total, cfg.jobs,
            [&](uint64_t clo, uint64_t chi, Partial& part) {
                Closure0Eval ev(mod);
                for (uint64_t i = clo; i < chi; ++i)
                    eval(aspace.decode(i), ev, part);
            });
        finish_report(rep, std::move(merged), sw);
    } else {
        auto merged = detail::run_parallel(
            cfg.trials, cfg.jobs, [&](uint64_t t0, uint64_t t1, Partial& part) {
                Closure0Eval ev(mod);
                for (uint64_t t = t0; t < t1; ++t) {
                    SplitMix64 g{substream_seed(cfg.seed, t)};
                    eval(aspace.sample(g), ev, part);
                }
            });
        finish_report(rep, std::move(merged), sw);
    }
    return rep;
}

namespace {

/// Walks the ordered (X, Y) assignments of a set's positions: trit 0 =
/// neither, 1 = in X, 2 = in Y. Masks are over positions, not residues, so
/// the element count (not the modulus) bounds the word width.
struct DisjointPairOdometer {
    std::vector<uint8_t> trits;
    uint64_t xmask = 0, ymask = 0;
    uint32_t xcnt = 0, ycnt = 0;

    explicit DisjointPairOdometer(size_t count) : trits(count, 0) {}

    /// Advances to the next assignment; false when the space is done.
    bool next() {
        for (size_t i = 0; i < trits.size(); ++i) {
            uint64_t bit = uint64_t(1) << i;
            if (trits[i] == 0) {
                trits[i] = 1;
                xmask |= bit;
                ++xcnt;
                return true;
            }
            if (trits[i] == 1) {
                trits[i] = 2;
                xmask &= ~bit;
                --xcnt;
                ymask |= bit;
                ++ycnt;
                return true;
            }
            trits[i] = 0;
            ymask &= ~bit;
            --ycnt;
        }
        return false;
    }

    void fill(std::span<const uint32_t> elems, std::vector<uint32_t>& xs,
              std::vector<uint32_t>& ys) const {
        xs.clear();
        ys.clear();
        for (size_t i = 0; i < trits.size(); ++i) {
            if (trits[i] == 1) xs.push_back(elems[i]);
            if (trits[i] == 2) ys.push_back(elems[i]);
        }
    }
};

}  // namespace

AuditReport audit_final_inequality(uint32_t n, const CampaignConfig& cfg) {
    Stopwatch sw;
    const Modulus mod(n);
    AuditReport rep;
    rep.check_id = "final_ineq";
    rep.n = n;
    rep.mode = std::string(mode_name(cfg.mode));
    if (cfg.mode == Mode::sampled) {
        if (cfg.trials == 0)
            throw std::invalid_argument("sampled mode requires trials >= 1");
        rep.seed = cfg.seed;
    }

    const ResidueSet pool = units(mod);
    const uint32_t u = pool.size();

    auto check_pair = [&](std::span<const uint32_t> a_elems,
                          std::span<const uint32_t> xs,
                          std::span<const uint32_t> ys, Closure0Eval& ev,
                          Partial& part) {
        int64_t lhs = int64_t(ev.size(xs)) + ev.size(ys);
        if (lhs > int64_t(n) + 1)
            part.violations.push_back(
                Witness{n,
                        "eq8",
                        {{"A", format_set_literal(a_elems)},
                         {"X", format_set_literal(xs)},
                         {"Y", format_set_literal(ys)}},
                        lhs,
                        int64_t(n) + 1,
                        "<="});
        ++part.tested;
    };

    if (cfg.mode == Mode::exhaustive) {
        if (u > 63) {
            detail::check_budget(~uint64_t(0), cfg);
            throw std::invalid_argument(
                "exhaustive disjoint-pair audit supports phi(n) <= 63");
        }
        const uint64_t a_space = (uint64_t(1) << u) - 1;
        rep.params["unit_subsets"] = a_space;
        detail::check_budget(a_space, cfg);
        auto merged = detail::run_parallel(
            a_space, cfg.jobs, [&](uint64_t clo, uint64_t chi, Partial& part) {
                Closure0Eval ev(mod);
                std::vector<uint32_t> a_elems, xs, ys;
                for (uint64_t ai = clo; ai < chi; ++ai) {
                    uint64_t amask = ai + 1;
                    a_elems.clear();
                    uint64_t am = amask;
                    while (am) {
                        a_elems.push_back(pool[std::countr_zero(am)]);
                        am &= am - 1;
                    }
                    if (ev.complete_units(a_elems)) continue;
                    ++part.aux;  // incomplete A found
                    DisjointPairOdometer odo(a_elems.size());
                    while (odo.next()) {
                        if (odo.xcnt == 0 || odo.ycnt == 0) continue;
                        odo.fill(a_elems, xs, ys);
                        check_pair(a_elems, xs, ys, ev, part);
                    }
                }
            });
        rep.params["incomplete_sets"] = merged.aux;
        finish_report(rep, std::move(merged), sw);
    } else {
        auto merged = detail::run_parallel(
            cfg.trials, cfg.jobs, [&](uint64_t t0, uint64_t t1, Partial& part) {
                Closure0Eval ev(mod);
                std::vector<uint32_t> idx, xs, ys;
                for (uint64_t t = t0; t < t1; ++t) {
                    SplitMix64 g{substream_seed(cfg.seed, t)};
                    uint32_t sa = 1 + uint32_t(bounded(g, u));
                    detail::sample_elems(g, u, sa, idx);
                    std::vector<uint32_t> a_elems(sa);
                    for (uint32_t i = 0; i < sa; ++i) a_elems[i] = pool[idx[i]];
                    ++part.tested;
                    if (sa < 2 || ev.complete_units(a_elems)) continue;
                    ++part.aux;
                    // one random disjoint nonempty pair
                    xs.clear();
                    ys.clear();
                    for (uint32_t attempt = 0; attempt < 32; ++attempt) {
                        xs.clear();
                        ys.clear();
                        for (uint32_t e : a_elems) {
                            switch (bounded(g, 3)) {
                                case 1: xs.push_back(e); break;
                                case 2: ys.push_back(e); break;
                                default: break;
                            }
                        }
                        if (!xs.empty() && !ys.empty()) break;
                    }
                    if (xs.empty() || ys.empty()) {
                        xs.assign(1, a_elems[0]);
                        ys.assign(1, a_elems[1]);
                    }
                    uint32_t sx = ev.size(xs), sy = ev.size(ys);
                    int64_t lhs = int64_t(sx) + sy;
                    if (lhs > int64_t(n) + 1)
                        part.violations.push_back(
                            Witness{n,
                                    "eq8",
                                    {{"A", format_set_literal(a_elems)},
                                     {"X", format_set_literal(xs)},
                                     {"Y", format_set_literal(ys)}},
                                    lhs,
                                    int64_t(n) + 1,
                                    "<="});
                }
            });
        rep.params["incomplete_sets"] = merged.aux;
        finish_report(rep, std::move(merged), sw);
    }
    return rep;
}

MaxIncompleteResult max_incomplete_size(uint32_t n, uint64_t budget,
                                        bool budget_override) {
    const Modulus mod(n);
    const ResidueSet pool = units(mod);
    const uint32_t phi = pool.size();
    Closure0Eval ev(mod);
    uint64_t enumerated = 0;
    std::vector<uint32_t> xs;
    for (uint32_t s = phi; s >= 1; --s) {
        uint64_t space = binomial_capped(phi, s);
        if (!budget_override && enumerated + space > budget)
            throw BudgetError(enumerated + space);
        enumerated += space;
        std::vector<uint32_t> idx(s);
        for (uint32_t i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            xs.clear();
            for (uint32_t i : idx) xs.push_back(pool[i]);
            if (!ev.complete_units(xs))
                return MaxIncompleteResult{s, ResidueSet(mod, xs)};
            if (!colex_next(idx, phi)) break;
        }
    }
    // Unreachable: a unit singleton {x} has S = {x} and <x> = Z_n with n >= 2.
    throw std::logic_error("no incomplete unit subset found");
}

}  // namespace znsum
