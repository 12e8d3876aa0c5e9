#include "znsum/verify.hpp"

#include <numeric>

#include "campaign_util.hpp"

namespace znsum {

using detail::Partial;
using detail::Stopwatch;

std::string_view mode_name(Mode m) {
    return m == Mode::exhaustive ? "exhaustive" : "sampled";
}

Mode mode_from_name(std::string_view name) {
    if (name == "exhaustive") return Mode::exhaustive;
    if (name == "sampled") return Mode::sampled;
    throw std::invalid_argument("unknown mode");
}

BudgetError::BudgetError(uint64_t req)
    : std::runtime_error("campaign of " + std::to_string(req) +
                         " instances exceeds the enumeration budget"),
      required(req) {}

namespace {

/// Reusable buffers for closure evaluation on word-array sets (n > 64 paths).
struct ClosureWs {
    ZnSet s, scratch;
    explicit ClosureWs(Modulus m) : s(m), scratch(m) {}

    /// For unit sets <A> is all of Z_n, so complete <=> S_A saturates.
    bool complete_units(std::span<const uint32_t> xs, uint32_t n) {
        s.clear();
        for (uint32_t x : xs) {
            scratch.clear();
            scratch.or_with_rotated(s, x);
            s |= scratch;
            s.set(x);
            if (s.count() == n) return true;
        }
        return false;
    }

    uint32_t closure0_size(std::span<const uint32_t> xs) {
        s.clear();
        s.set(0);
        for (uint32_t x : xs) {
            scratch.clear();
            scratch.or_with_rotated(s, x);
            s |= scratch;
        }
        return s.count();
    }
};

bool units_complete_mask(uint64_t elems, uint32_t n, uint64_t full) {
    uint64_t s = 0;
    while (elems) {
        uint32_t x = uint32_t(std::countr_zero(elems));
        elems &= elems - 1;
        s = s | detail::rot_mask(s, x, n, full) | (uint64_t(1) << x);
        if (s == full) return true;
    }
    return false;
}

uint64_t elems_to_mask(std::span<const uint32_t> xs) {
    uint64_t m = 0;
    for (uint32_t x : xs) m |= uint64_t(1) << x;
    return m;
}

Witness incomplete_witness(uint32_t n, const ResidueSet& a) {
    auto cp = subset_sums(a);
    return Witness{n,
                   "thm1",
                   {{"A", a.literal()}},
                   int64_t(cp.s.count()),
                   int64_t(subgroup_generated(a).count()),
                   "=="};
}

void finish(AuditReport& rep, Partial&& merged, const Stopwatch& sw) {
    rep.instances_tested = merged.tested;
    rep.violations = std::move(merged.violations);
    rep.findings = std::move(merged.findings);
    canonicalize(rep.violations);
    canonicalize(rep.findings);
    rep.violations.erase(std::unique(rep.violations.begin(), rep.violations.end()),
                         rep.violations.end());
    rep.findings.erase(std::unique(rep.findings.begin(), rep.findings.end()),
                       rep.findings.end());
    rep.elapsed_ms = sw.ms();
}

void require_sampling_config(const CampaignConfig& cfg, AuditReport& rep) {
    if (cfg.trials == 0)
        throw std::invalid_argument("sampled mode requires trials >= 1");
    rep.seed = cfg.seed;
}

}  // namespace

AuditReport verify_theorem(uint32_t n, const CampaignConfig& cfg) {
    if (n < 5) throw std::invalid_argument("verify_theorem requires n >= 5");
    Stopwatch sw;
    const Modulus mod(n);
    AuditReport rep;
    rep.check_id = "theorem";
    rep.n = n;
    rep.mode = std::string(mode_name(cfg.mode));

    const uint32_t m = main_threshold(n);
    const uint32_t phi = euler_phi(n);
    rep.params["threshold"] = m;
    rep.params["phi"] = phi;
    if (cfg.mode == Mode::sampled) require_sampling_config(cfg, rep);
    if (m > phi) {
        // Not enough units to form a set at the threshold size.
        rep.params["vacuous"] = true;
        rep.elapsed_ms = sw.ms();
        return rep;
    }

    const bool small = n <= 64;
    const uint64_t full = small ? detail::full_mask(n) : 0;

    if (cfg.mode == Mode::exhaustive) {
        const ResidueSet pool = units(mod);
        const uint64_t space = binomial_capped(phi, m);
        uint64_t lo = 0, hi = space;
        if (cfg.rank_range) {
            lo = cfg.rank_range->first;
            hi = cfg.rank_range->second;
            if (lo > hi || hi > space)
                throw std::invalid_argument("rank range out of bounds");
            rep.params["rank_lo"] = lo;
            rep.params["rank_hi"] = hi;
        }
        rep.params["space"] = space;
        detail::check_budget(hi - lo, cfg);

        auto merged = detail::run_parallel(
            hi - lo, cfg.jobs, [&](uint64_t clo, uint64_t chi, Partial& part) {
                std::vector<uint32_t> idx = colex_unrank(lo + clo, m, phi);
                std::vector<uint32_t> xs(m);
                ClosureWs ws(mod);
                for (uint64_t rank = clo; rank < chi; ++rank) {
                    for (uint32_t i = 0; i < m; ++i) xs[i] = pool[idx[i]];
                    bool complete =
                        small ? units_complete_mask(elems_to_mask(xs), n, full)
                              : ws.complete_units(xs, n);
                    if (!complete)
                        part.violations.push_back(
                            incomplete_witness(n, ResidueSet(mod, xs)));
                    ++part.tested;
                    if (rank + 1 < chi) colex_next(idx, phi);
                }
            });
        finish(rep, std::move(merged), sw);
    } else {
        auto merged = detail::run_parallel(
            cfg.trials, cfg.jobs, [&](uint64_t t0, uint64_t t1, Partial& part) {
                std::vector<uint32_t> xs;
                ClosureWs ws(mod);
                for (uint64_t t = t0; t < t1; ++t) {
                    SplitMix64 g{substream_seed(cfg.seed, t)};
                    detail::sample_units(g, n, m, xs);
                    bool complete =
                        small ? units_complete_mask(elems_to_mask(xs), n, full)
                              : ws.complete_units(xs, n);
                    if (!complete)
                        part.violations.push_back(
                            incomplete_witness(n, ResidueSet(mod, xs)));
                    ++part.tested;
                }
            });
        finish(rep, std::move(merged), sw);
    }
    return rep;
}

namespace {

/// |k-fold-sums| == n evaluated over the layered DP, early exit on saturation.
bool kfold_full_mask(std::span<const uint32_t> xs, uint32_t k, uint32_t n,
                     uint64_t full) {
    uint64_t rows[65];
    rows[0] = 1;
    for (uint32_t j = 1; j <= k; ++j) rows[j] = 0;
    uint32_t processed = 0;
    for (uint32_t x : xs) {
        ++processed;
        for (uint32_t j = std::min(k, processed); j >= 1; --j)
            rows[j] |= detail::rot_mask(rows[j - 1], x, n, full);
        if (rows[k] == full) return true;
    }
    return rows[k] == full;
}

struct KfoldWs {
    std::vector<ZnSet> rows;
    ZnSet scratch;
    KfoldWs(Modulus m, uint32_t k) : rows(k + 1, ZnSet(m)), scratch(m) {}

    bool full(std::span<const uint32_t> xs, uint32_t k, uint32_t n) {
        for (auto& r : rows) r.clear();
        rows[0].set(0);
        uint32_t processed = 0;
        for (uint32_t x : xs) {
            ++processed;
            for (uint32_t j = std::min(k, processed); j >= 1; --j) {
                scratch.clear();
                scratch.or_with_rotated(rows[j - 1], x);
                rows[j] |= scratch;
            }
            if (rows[k].count() == n) return true;
        }
        return false;
    }
};

}  // namespace

AuditReport check_conjecture(uint32_t n, const CampaignConfig& cfg) {
    if (n < 5) throw std::invalid_argument("check_conjecture requires n >= 5");
    Stopwatch sw;
    const Modulus mod(n);
    AuditReport rep;
    rep.check_id = "conjecture";
    rep.n = n;
    rep.mode = std::string(mode_name(cfg.mode));

    const auto [k, m] = conjecture_params(n);
    const uint32_t phi = euler_phi(n);
    rep.params["k"] = k;
    rep.params["min_size"] = m;
    rep.params["phi"] = phi;
    if (cfg.mode == Mode::sampled) require_sampling_config(cfg, rep);
    if (m > phi) {
        rep.params["vacuous"] = true;
        rep.elapsed_ms = sw.ms();
        return rep;
    }

    const bool small = n <= 64;
    const uint64_t full = small ? detail::full_mask(n) : 0;

    auto make_witness = [&](const ResidueSet& a) {
        return Witness{n,
                       "conj2",
                       {{"A", a.literal()}},
                       int64_t(k_fold_sums(a, k).count()),
                       int64_t(n),
                       "=="};
    };

    if (cfg.mode == Mode::exhaustive) {
        const ResidueSet pool = units(mod);
        const uint64_t space = binomial_capped(phi, m);
        rep.params["space"] = space;
        detail::check_budget(space, cfg);
        auto merged = detail::run_parallel(
            space, cfg.jobs, [&](uint64_t clo, uint64_t chi, Partial& part) {
                std::vector<uint32_t> idx = colex_unrank(clo, m, phi);
                std::vector<uint32_t> xs(m);
                KfoldWs ws(mod, small ? 0 : k);
                for (uint64_t rank = clo; rank < chi; ++rank) {
                    for (uint32_t i = 0; i < m; ++i) xs[i] = pool[idx[i]];
                    bool covers = small ? kfold_full_mask(xs, k, n, full)
                                        : ws.full(xs, k, n);
                    if (!covers)
                        part.violations.push_back(make_witness(ResidueSet(mod, xs)));
                    ++part.tested;
                    if (rank + 1 < chi) colex_next(idx, phi);
                }
            });
        finish(rep, std::move(merged), sw);
    } else {
        auto merged = detail::run_parallel(
            cfg.trials, cfg.jobs, [&](uint64_t t0, uint64_t t1, Partial& part) {
                std::vector<uint32_t> xs;
                KfoldWs ws(mod, small ? 0 : k);
                for (uint64_t t = t0; t < t1; ++t) {
                    SplitMix64 g{substream_seed(cfg.seed, t)};
                    detail::sample_units(g, n, m, xs);
                    bool covers = small ? kfold_full_mask(xs, k, n, full)
                                        : ws.full(xs, k, n);
                    if (!covers)
                        part.violations.push_back(make_witness(ResidueSet(mod, xs)));
                    ++part.tested;
                }
            });
        finish(rep, std::move(merged), sw);
    }
    return rep;
}

AuditReport audit_chowla(uint32_t n, const CampaignConfig& cfg) {
    Stopwatch sw;
    const Modulus mod(n);
    AuditReport rep;
    rep.check_id = "chowla";
    rep.n = n;
    rep.mode = std::string(mode_name(cfg.mode));
    const uint32_t phi = euler_phi(n);
    rep.params["phi"] = phi;
    if (cfg.mode == Mode::sampled) require_sampling_config(cfg, rep);

    auto make_witness = [&](uint32_t nn, std::string x_lit, std::string y_lit,
                            uint32_t got, uint32_t sx, uint32_t sy) {
        return Witness{nn,
                       "chowla",
                       {{"X", std::move(x_lit)}, {"Y", std::move(y_lit)}},
                       int64_t(got),
                       int64_t(chowla_bound(nn, sx, sy)),
                       ">="};
    };

    if (cfg.mode == Mode::exhaustive) {
        if (n > 63) {
            // The pair space dwarfs any overridable budget long before this.
            detail::check_budget(~uint64_t(0), cfg);
            throw std::invalid_argument(
                "exhaustive pair audit supports n <= 63");
        }
        // Every nonempty X x every unit part of Y; both are dense mask spaces.
        unsigned __int128 space128 =
            (((unsigned __int128)1 << n) - 1) << phi;
        uint64_t space = detail::sat_u64(space128);
        rep.params["space"] = space;
        detail::check_budget(space, cfg);
        const ResidueSet pool = units(mod);
        const uint64_t full = detail::full_mask(n);
        auto merged = detail::run_parallel(
            space, cfg.jobs, [&](uint64_t clo, uint64_t chi, Partial& part) {
                for (uint64_t rho = clo; rho < chi; ++rho) {
                    uint64_t xmask = 1 + (rho >> phi);
                    uint64_t tmask = rho & ((uint64_t(1) << phi) - 1);
                    uint64_t ymask = 1;  // 0 is always a member
                    uint64_t tm = tmask;
                    while (tm) {
                        uint32_t i = uint32_t(std::countr_zero(tm));
                        tm &= tm - 1;
                        ymask |= uint64_t(1) << pool[i];
                    }
                    uint32_t sx = uint32_t(std::popcount(xmask));
                    uint32_t sy = uint32_t(std::popcount(ymask));
                    uint32_t got = uint32_t(
                        std::popcount(detail::sumset_mask(xmask, ymask, n, full)));
                    if (got < chowla_bound(n, sx, sy))
                        part.violations.push_back(
                            make_witness(n, detail::mask_literal(xmask),
                                         detail::mask_literal(ymask), got, sx, sy));
                    ++part.tested;
                }
            });
        finish(rep, std::move(merged), sw);
    } else {
        const bool small = n <= 64;
        const uint64_t full = small ? detail::full_mask(n) : 0;
        auto merged = detail::run_parallel(
            cfg.trials, cfg.jobs, [&](uint64_t t0, uint64_t t1, Partial& part) {
                std::vector<uint32_t> xs, ys;
                ZnSet xset(mod), acc(mod);
                for (uint64_t t = t0; t < t1; ++t) {
                    SplitMix64 g{substream_seed(cfg.seed, t)};
                    uint32_t sx = 1 + uint32_t(bounded(g, n));
                    detail::sample_elems(g, n, sx, xs);
                    uint32_t ty = uint32_t(bounded(g, uint64_t(phi) + 1));
                    detail::sample_units(g, n, ty, ys);
                    ys.insert(ys.begin(), 0);  // 0 joins the sampled unit part
                    uint32_t sy = ty + 1;
                    uint32_t got;
                    if (small) {
                        uint64_t xm = elems_to_mask(xs), ym = elems_to_mask(ys);
                        got = uint32_t(
                            std::popcount(detail::sumset_mask(xm, ym, n, full)));
                    } else {
                        xset.clear();
                        for (uint32_t x : xs) xset.set(x);
                        acc.clear();
                        for (uint32_t y : ys) acc.or_with_rotated(xset, y);
                        got = acc.count();
                    }
                    if (got < chowla_bound(n, sx, sy))
                        part.violations.push_back(make_witness(
                            n, format_set_literal(xs), format_set_literal(ys),
                            got, sx, sy));
                    ++part.tested;
                }
            });
        finish(rep, std::move(merged), sw);
    }
    return rep;
}

namespace {

// The closure-growth identities work over Y inside Z_n \ {0}; masks over the
// nonzero residues use bit i <=> residue i+1.
uint64_t nonzero_mask_to_residues(uint64_t m) {
    return m << 1;
}

struct OlsonMaskCtx {
    uint32_t n;
    uint64_t full;

    uint64_t closure0(uint64_t elem_mask) const {
        return detail::closure0_mask(elem_mask, n, full);
    }
    uint32_t lam(uint64_t b, uint32_t x) const {
        return detail::lambda_mask(b, x, n, full);
    }
};

}  // namespace

AuditReport audit_olson_identities(uint32_t n, const CampaignConfig& cfg) {
    Stopwatch sw;
    const Modulus mod(n);
    AuditReport rep;
    rep.check_id = "olson";
    rep.n = n;
    rep.mode = std::string(mode_name(cfg.mode));
    if (cfg.mode == Mode::sampled) require_sampling_config(cfg, rep);

    Partial all;

    if (cfg.mode == Mode::exhaustive) {
        if (n > 63) {
            detail::check_budget(~uint64_t(0), cfg);
            throw std::invalid_argument(
                "exhaustive identity audit supports n <= 63");
        }
        const uint64_t y_space = (uint64_t(1) << (n - 1)) - 1;  // nonempty Y
        const uint64_t b_space = (uint64_t(1) << n) - 1;        // nonempty B
        unsigned __int128 total128 =
            (unsigned __int128)y_space * n +
            (unsigned __int128)b_space * (uint64_t(n) + uint64_t(n) * n) +
            (unsigned __int128)b_space * y_space;
        uint64_t total = detail::sat_u64(total128);
        rep.params["space"] = total;
        detail::check_budget(total, cfg);
        const OlsonMaskCtx ctx{n, detail::full_mask(n)};

        // Phase 1: closure growth (eq1, eq2), one closure per Y reused for
        // every y in Y and z outside it.
        auto p1 = detail::run_parallel(
            y_space, cfg.jobs, [&](uint64_t clo, uint64_t chi, Partial& part) {
                for (uint64_t yi = clo; yi < chi; ++yi) {
                    uint64_t ymask = nonzero_mask_to_residues(yi + 1);
                    uint64_t b0 = ctx.closure0(ymask);
                    int64_t b0_size = std::popcount(b0);
                    std::string y_lit = detail::mask_literal(ymask);
                    for (uint32_t x = 0; x < n; ++x) {
                        uint64_t xbit = uint64_t(1) << x;
                        if (ymask & xbit) {
                            int64_t prev = std::popcount(ctx.closure0(ymask & ~xbit));
                            int64_t lam = ctx.lam(b0, x);
                            if (b0_size < prev + lam)
                                part.violations.push_back(Witness{
                                    n,
                                    "eq1",
                                    {{"Y", y_lit}, {"y", std::to_string(x)}},
                                    b0_size,
                                    prev + lam,
                                    ">="});
                        } else {
                            int64_t grown = std::popcount(ctx.closure0(ymask | xbit));
                            int64_t lam = ctx.lam(b0, x);
                            if (grown != b0_size + lam)
                                part.violations.push_back(Witness{
                                    n,
                                    "eq2",
                                    {{"Y", y_lit}, {"z", std::to_string(x)}},
                                    grown,
                                    b0_size + lam,
                                    "=="});
                        }
                        ++part.tested;
                    }
                }
            });
        detail::merge_into(all, std::move(p1));

        // Phase 2: symmetry and subadditivity (eq3, eq4) over every nonempty B.
        auto p2 = detail::run_parallel(
            b_space, cfg.jobs, [&](uint64_t clo, uint64_t chi, Partial& part) {
                std::vector<uint32_t> lam(n);
                for (uint64_t bi = clo; bi < chi; ++bi) {
                    uint64_t bmask = bi + 1;
                    for (uint32_t x = 0; x < n; ++x) lam[x] = ctx.lam(bmask, x);
                    std::string b_lit = detail::mask_literal(bmask);
                    for (uint32_t x = 0; x < n; ++x) {
                        uint32_t neg = x == 0 ? 0 : n - x;
                        if (lam[x] != lam[neg])
                            part.violations.push_back(Witness{
                                n,
                                "eq3",
                                {{"B", b_lit}, {"x", std::to_string(x)}},
                                int64_t(lam[x]),
                                int64_t(lam[neg]),
                                "=="});
                        ++part.tested;
                        for (uint32_t y = 0; y < n; ++y) {
                            uint32_t xy = x + y >= n ? x + y - n : x + y;
                            if (lam[xy] > lam[x] + lam[y])
                                part.violations.push_back(Witness{
                                    n,
                                    "eq4",
                                    {{"B", b_lit},
                                     {"x", std::to_string(x)},
                                     {"y", std::to_string(y)}},
                                    int64_t(lam[xy]),
                                    int64_t(lam[x]) + lam[y],
                                    "<="});
                            ++part.tested;
                        }
                    }
                }
            });
        detail::merge_into(all, std::move(p2));

        // Phase 3: the sum bound (eq5) over every (B, 0-free C) pair.
        auto p3 = detail::run_parallel(
            b_space, cfg.jobs, [&](uint64_t clo, uint64_t chi, Partial& part) {
                std::vector<uint32_t> lam(n);
                for (uint64_t bi = clo; bi < chi; ++bi) {
                    uint64_t bmask = bi + 1;
                    for (uint32_t x = 0; x < n; ++x) lam[x] = ctx.lam(bmask, x);
                    int64_t b_size = std::popcount(bmask);
                    std::string b_lit = detail::mask_literal(bmask);
                    for (uint64_t ci = 0; ci < y_space; ++ci) {
                        uint64_t cmask = nonzero_mask_to_residues(ci + 1);
                        int64_t sum = 0;
                        uint64_t cm = cmask;
                        while (cm) {
                            sum += lam[std::countr_zero(cm)];
                            cm &= cm - 1;
                        }
                        int64_t c_size = std::popcount(cmask);
                        int64_t bound = b_size * (c_size - b_size + 1);
                        if (sum < bound)
                            part.violations.push_back(Witness{
                                n,
                                "eq5",
                                {{"B", b_lit}, {"C", detail::mask_literal(cmask)}},
                                sum,
                                bound,
                                ">="});
                        ++part.tested;
                    }
                }
            });
        detail::merge_into(all, std::move(p3));
    } else {
        // One sampled instance bundles one check of each identity.
        rep.params["claims_per_instance"] = 5;
        const bool small = n <= 64;
        const OlsonMaskCtx ctx{n, small ? detail::full_mask(n) : 0};
        auto sampled = detail::run_parallel(
            cfg.trials, cfg.jobs, [&](uint64_t t0, uint64_t t1, Partial& part) {
                std::vector<uint32_t> yv, bv, cv;
                ClosureWs ws(mod);
                ZnSet bset(mod), tmp(mod);
                for (uint64_t t = t0; t < t1; ++t) {
                    SplitMix64 g{substream_seed(cfg.seed, t)};
                    // Y nonempty inside Z_n \ {0}
                    uint32_t sy = 1 + uint32_t(bounded(g, n - 1));
                    detail::sample_elems(g, n - 1, sy, yv);
                    for (auto& v : yv) ++v;
                    uint32_t y = yv[bounded(g, sy)];
                    uint32_t z;  // uniform over the complement of Y
                    {
                        uint64_t draws = 0;
                        for (;;) {
                            z = uint32_t(bounded(g, n));
                            if (std::find(yv.begin(), yv.end(), z) == yv.end())
                                break;
                            if (++draws > 64) {
                                uint32_t skip = uint32_t(bounded(g, n - sy));
                                z = 0;
                                for (uint32_t v = 0;; ++v) {
                                    if (std::find(yv.begin(), yv.end(), v) ==
                                        yv.end()) {
                                        if (skip == 0) {
                                            z = v;
                                            break;
                                        }
                                        --skip;
                                    }
                                }
                                break;
                            }
                        }
                    }
                    uint32_t sb = 1 + uint32_t(bounded(g, n));
                    detail::sample_elems(g, n, sb, bv);
                    uint32_t x1 = uint32_t(bounded(g, n));
                    uint32_t y1 = uint32_t(bounded(g, n));
                    uint32_t sc = 1 + uint32_t(bounded(g, n - 1));
                    detail::sample_elems(g, n - 1, sc, cv);
                    for (auto& v : cv) ++v;

                    std::string y_lit = format_set_literal(yv);
                    std::string b_lit = format_set_literal(bv);

                    if (small) {
                        uint64_t ymask = elems_to_mask(yv);
                        uint64_t b0 = ctx.closure0(ymask);
                        int64_t b0_size = std::popcount(b0);
                        int64_t prev = std::popcount(
                            ctx.closure0(ymask & ~(uint64_t(1) << y)));
                        int64_t lam_y = ctx.lam(b0, y);
                        if (b0_size < prev + lam_y)
                            part.violations.push_back(
                                Witness{n, "eq1",
                                        {{"Y", y_lit}, {"y", std::to_string(y)}},
                                        b0_size, prev + lam_y, ">="});
                        int64_t grown = std::popcount(
                            ctx.closure0(ymask | (uint64_t(1) << z)));
                        int64_t lam_z = ctx.lam(b0, z);
                        if (grown != b0_size + lam_z)
                            part.violations.push_back(
                                Witness{n, "eq2",
                                        {{"Y", y_lit}, {"z", std::to_string(z)}},
                                        grown, b0_size + lam_z, "=="});
                        uint64_t bmask = elems_to_mask(bv);
                        int64_t lx = ctx.lam(bmask, x1);
                        int64_t lnegx = ctx.lam(bmask, x1 == 0 ? 0 : n - x1);
                        if (lx != lnegx)
                            part.violations.push_back(
                                Witness{n, "eq3",
                                        {{"B", b_lit}, {"x", std::to_string(x1)}},
                                        lx, lnegx, "=="});
                        uint32_t xy = x1 + y1 >= n ? x1 + y1 - n : x1 + y1;
                        int64_t lxy = ctx.lam(bmask, xy);
                        int64_t ly = ctx.lam(bmask, y1);
                        if (lxy > lx + ly)
                            part.violations.push_back(Witness{
                                n, "eq4",
                                {{"B", b_lit},
                                 {"x", std::to_string(x1)},
                                 {"y", std::to_string(y1)}},
                                lxy, lx + ly, "<="});
                        int64_t sum = 0;
                        for (uint32_t c : cv) sum += ctx.lam(bmask, c);
                        int64_t bound = int64_t(sb) * (int64_t(sc) - sb + 1);
                        if (sum < bound)
                            part.violations.push_back(
                                Witness{n, "eq5",
                                        {{"B", b_lit}, {"C", format_set_literal(cv)}},
                                        sum, bound, ">="});
                    } else {
                        // Word-array route for large moduli.
                        int64_t b0_size, prev, grown;
                        ZnSet b0(mod);
                        {
                            ws.closure0_size(yv);
                            b0 = ws.s;
                            b0_size = b0.count();
                        }
                        {
                            std::vector<uint32_t> rest;
                            for (uint32_t v : yv)
                                if (v != y) rest.push_back(v);
                            prev = ws.closure0_size(rest);
                        }
                        {
                            std::vector<uint32_t> ext = yv;
                            ext.push_back(z);
                            std::sort(ext.begin(), ext.end());
                            grown = ws.closure0_size(ext);
                        }
                        int64_t lam_y = lambda(b0, y), lam_z = lambda(b0, z);
                        if (b0_size < prev + lam_y)
                            part.violations.push_back(
                                Witness{n, "eq1",
                                        {{"Y", y_lit}, {"y", std::to_string(y)}},
                                        b0_size, prev + lam_y, ">="});
                        if (grown != b0_size + lam_z)
                            part.violations.push_back(
                                Witness{n, "eq2",
                                        {{"Y", y_lit}, {"z", std::to_string(z)}},
                                        grown, b0_size + lam_z, "=="});
                        bset.clear();
                        for (uint32_t v : bv) bset.set(v);
                        int64_t lx = lambda(bset, x1);
                        int64_t lnegx = lambda(bset, x1 == 0 ? 0 : n - x1);
                        if (lx != lnegx)
                            part.violations.push_back(
                                Witness{n, "eq3",
                                        {{"B", b_lit}, {"x", std::to_string(x1)}},
                                        lx, lnegx, "=="});
                        uint32_t xy = x1 + y1 >= n ? x1 + y1 - n : x1 + y1;
                        int64_t lxy = lambda(bset, xy);
                        int64_t ly = lambda(bset, y1);
                        if (lxy > lx + ly)
                            part.violations.push_back(Witness{
                                n, "eq4",
                                {{"B", b_lit},
                                 {"x", std::to_string(x1)},
                                 {"y", std::to_string(y1)}},
                                lxy, lx + ly, "<="});
                        int64_t sum = 0;
                        for (uint32_t c : cv) sum += lambda(bset, c);
                        int64_t bound = int64_t(sb) * (int64_t(sc) - sb + 1);
                        if (sum < bound)
                            part.violations.push_back(
                                Witness{n, "eq5",
                                        {{"B", b_lit}, {"C", format_set_literal(cv)}},
                                        sum, bound, ">="});
                    }
                    ++part.tested;
                }
            });
        detail::merge_into(all, std::move(sampled));
    }

    finish(rep, std::move(all), sw);
    return rep;
}

}  // namespace znsum
