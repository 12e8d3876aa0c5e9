// znsum: subset-sum arithmetic in Z_n, completeness thresholds, and
// exhaustive/randomized audits of the classical sumset inequalities.
//
// Exit codes: 0 no violations, 1 violations found, 2 usage error,
// 3 enumeration budget refused.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "znsum/bounds.hpp"
#include "znsum/report.hpp"
#include "znsum/sums.hpp"
#include "znsum/verify.hpp"
#include "znsum/zn.hpp"

namespace {

using namespace znsum;

struct CommonCampaignOpts {
    std::optional<uint32_t> n;
    std::string n_range;
    std::string mode = "exhaustive";
    uint64_t trials = 10'000;
    uint64_t seed = 0;
    std::optional<uint32_t> jobs;
    std::string format = "json";
    uint64_t budget = kDefaultBudget;
    bool override_budget = false;
};

void add_campaign_flags(CLI::App* cmd, CommonCampaignOpts& o) {
    auto* n_opt = cmd->add_option("--n", o.n, "single modulus");
    auto* r_opt =
        cmd->add_option("--n-range", o.n_range, "inclusive range a:b");
    n_opt->excludes(r_opt);
    r_opt->excludes(n_opt);
    cmd->add_option("--mode", o.mode, "exhaustive or sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    cmd->add_option("--trials", o.trials, "instances per n in sampled mode");
    cmd->add_option("--seed", o.seed, "campaign seed in sampled mode");
    cmd->add_option("--jobs", o.jobs, "worker threads (env ZNSUM_JOBS)");
    cmd->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--budget", o.budget, "exhaustive instance budget");
    cmd->add_flag("--override-budget", o.override_budget,
                  "run campaigns beyond the budget");
}

uint32_t default_jobs() {
    if (const char* env = std::getenv("ZNSUM_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return uint32_t(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

std::pair<uint64_t, uint64_t> parse_range(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("range must look like a:b");
    size_t lo = std::stoull(s.substr(0, colon));
    size_t hi = std::stoull(s.substr(colon + 1));
    return {lo, hi};
}

std::pair<uint32_t, uint32_t> parse_n_range(const CommonCampaignOpts& o) {
    if (o.n) return {*o.n, *o.n};
    if (o.n_range.empty())
        throw std::invalid_argument("one of --n or --n-range is required");
    auto [lo, hi] = parse_range(o.n_range);
    if (lo > hi) throw std::invalid_argument("n-range lower exceeds upper");
    return {uint32_t(lo), uint32_t(hi)};
}

CampaignConfig make_config(const CommonCampaignOpts& o) {
    CampaignConfig cfg;
    cfg.mode = mode_from_name(o.mode);
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.jobs = o.jobs ? *o.jobs : default_jobs();
    cfg.budget = o.budget;
    cfg.budget_override = o.override_budget;
    return cfg;
}

template <class Runner>
int run_campaign(const CommonCampaignOpts& o, Runner runner) {
    auto [lo, hi] = parse_n_range(o);
    CampaignConfig cfg = make_config(o);
    bool csv = o.format == "csv";
    if (csv) std::cout << csv_header() << "\n";
    uint64_t violations = 0;
    for (uint32_t n = lo; n <= hi; ++n) {
        AuditReport rep = runner(n, cfg);
        violations += rep.violations.size();
        if (csv)
            std::cout << csv_row(rep) << "\n";
        else
            std::cout << to_json(rep).dump() << "\n";
    }
    return violations ? 1 : 0;
}

json set_json(const ZnSet& s) {
    return json{{"n", s.n()}, {"elements", s.elements()}};
}

int run(int argc, char** argv) {
    CLI::App app{
        "subset-sum arithmetic in Z_n: closures, restricted k-fold sums, "
        "completeness thresholds, and audits of the classical sumset bounds"};
    app.require_subcommand(1);

    // ---- sums ----
    uint32_t sums_n = 0;
    std::string sums_set;
    auto* sums_cmd = app.add_subcommand("sums", "subset-sum closures S and S0");
    sums_cmd->add_option("--n", sums_n)->required();
    sums_cmd->add_option("--set", sums_set, "elements of A")->required();

    // ---- kfold ----
    uint32_t kf_n = 0, kf_k = 0;
    std::string kf_set;
    auto* kf_cmd =
        app.add_subcommand("kfold", "sums of exactly-k-element subsets");
    kf_cmd->add_option("--n", kf_n)->required();
    kf_cmd->add_option("--set", kf_set)->required();
    kf_cmd->add_option("--k", kf_k)->required();

    // ---- complete ----
    uint32_t cp_n = 0;
    std::string cp_set;
    auto* cp_cmd = app.add_subcommand(
        "complete", "is every element of <A> a nonempty distinct-element sum");
    cp_cmd->add_option("--n", cp_n)->required();
    cp_cmd->add_option("--set", cp_set)->required();

    // ---- lambda ----
    uint32_t lm_n = 0, lm_x = 0;
    std::string lm_set;
    auto* lm_cmd =
        app.add_subcommand("lambda", "translate escape |(B+x) \\ B|");
    lm_cmd->add_option("--n", lm_n)->required();
    lm_cmd->add_option("--set", lm_set, "elements of B")->required();
    lm_cmd->add_option("--x", lm_x)->required();

    // ---- threshold ----
    uint32_t th_n = 0;
    std::string th_kind = "main_theorem";
    auto* th_cmd =
        app.add_subcommand("threshold", "integer-exact completeness thresholds");
    th_cmd->add_option("--n", th_n)->required();
    th_cmd->add_option("--kind", th_kind)
        ->check(CLI::IsMember(
            {"main_theorem", "olson", "conjecture_size", "conjecture_k"}));

    // ---- max-incomplete ----
    uint32_t mi_n = 0;
    uint64_t mi_budget = kDefaultBudget;
    bool mi_override = false;
    auto* mi_cmd = app.add_subcommand(
        "max-incomplete", "largest incomplete unit subset, by exhaustion");
    mi_cmd->add_option("--n", mi_n)->required();
    mi_cmd->add_option("--budget", mi_budget);
    mi_cmd->add_flag("--override-budget", mi_override);

    // ---- verify-theorem ----
    CommonCampaignOpts vt;
    std::string vt_rank;
    auto* vt_cmd = app.add_subcommand(
        "verify-theorem",
        "completeness of every unit subset at the threshold size");
    add_campaign_flags(vt_cmd, vt);
    vt_cmd->add_option("--rank-range", vt_rank,
                       "half-open colex rank slice lo:hi");

    // ---- verify-conjecture ----
    CommonCampaignOpts vc;
    auto* vc_cmd = app.add_subcommand(
        "verify-conjecture", "|k-fold sums| = n at the conjectured size");
    add_campaign_flags(vc_cmd, vc);

    // ---- audit ----
    CommonCampaignOpts au;
    std::string au_claim;
    auto* au_cmd = app.add_subcommand("audit", "audit one displayed claim");
    au_cmd
        ->add_option("--claim", au_claim,
                     "chowla | olson | lemma-eh | mainlemma | final-ineq")
        ->required()
        ->check(CLI::IsMember(
            {"chowla", "olson", "lemma-eh", "mainlemma", "final-ineq"}));
    add_campaign_flags(au_cmd, au);

    // ---- replay ----
    uint32_t rp_n = 0;
    std::string rp_proof, rp_set, rp_set_b;
    auto* rp_cmd =
        app.add_subcommand("replay", "step-by-step replay of one argument");
    rp_cmd->add_option("--proof", rp_proof, "main | lemma-eh")
        ->required()
        ->check(CLI::IsMember({"main", "lemma-eh"}));
    rp_cmd->add_option("--n", rp_n)->required();
    rp_cmd->add_option("--set", rp_set, "elements of A")->required();
    rp_cmd->add_option("--set-b", rp_set_b, "elements of B (lemma-eh)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (sums_cmd->parsed()) {
        Modulus m(sums_n);
        auto cp = subset_sums(ResidueSet::parse(m, sums_set));
        json out{{"n", sums_n},
                 {"set", sums_set},
                 {"s", set_json(cp.s)},
                 {"s0", set_json(cp.s0)}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (kf_cmd->parsed()) {
        Modulus m(kf_n);
        ZnSet r = k_fold_sums(ResidueSet::parse(m, kf_set), kf_k);
        json out{{"n", kf_n},
                 {"set", kf_set},
                 {"k", kf_k},
                 {"result", r.elements()}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (cp_cmd->parsed()) {
        Modulus m(cp_n);
        ResidueSet a = ResidueSet::parse(m, cp_set);
        auto closure = subset_sums(a);
        auto sub = subgroup_generated(a);
        json out{{"n", cp_n},
                 {"set", cp_set},
                 {"complete", closure.s == sub},
                 {"closure_size", closure.s.count()},
                 {"subgroup_size", sub.count()}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (lm_cmd->parsed()) {
        Modulus m(lm_n);
        ZnSet b = ZnSet::from_elements(m, parse_set_literal(lm_set));
        json out{{"n", lm_n},
                 {"set", lm_set},
                 {"x", lm_x},
                 {"lambda", lambda(b, lm_x)}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (th_cmd->parsed()) {
        ThresholdResult r = threshold(threshold_kind_from_name(th_kind), th_n);
        json out{{"n", r.n},
                 {"kind", std::string(threshold_kind_name(r.kind))},
                 {"value", r.value}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (mi_cmd->parsed()) {
        auto r = max_incomplete_size(mi_n, mi_budget, mi_override);
        json out{{"n", mi_n},
                 {"size", r.size},
                 {"witness", r.witness.literal()}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (vt_cmd->parsed()) {
        std::optional<std::pair<uint64_t, uint64_t>> rank;
        if (!vt_rank.empty()) rank = parse_range(vt_rank);
        return run_campaign(vt, [&](uint32_t n, CampaignConfig cfg) {
            cfg.rank_range = rank;
            return verify_theorem(n, cfg);
        });
    }
    if (vc_cmd->parsed()) {
        return run_campaign(
            vc, [](uint32_t n, const CampaignConfig& cfg) {
                return check_conjecture(n, cfg);
            });
    }
    if (au_cmd->parsed()) {
        return run_campaign(au, [&](uint32_t n, const CampaignConfig& cfg) {
            if (au_claim == "chowla") return audit_chowla(n, cfg);
            if (au_claim == "olson") return audit_olson_identities(n, cfg);
            if (au_claim == "lemma-eh") return audit_lemma_eh(n, cfg);
            if (au_claim == "mainlemma") return audit_mainlemma(n, cfg);
            return audit_final_inequality(n, cfg);
        });
    }
    if (rp_cmd->parsed()) {
        Modulus m(rp_n);
        ResidueSet a = ResidueSet::parse(m, rp_set);
        if (rp_proof == "main") {
            std::cout << to_json(replay_main_proof(rp_n, a)).dump() << "\n";
        } else {
            if (rp_set_b.empty())
                throw std::invalid_argument("--set-b is required for lemma-eh");
            ZnSet b = ZnSet::from_elements(m, parse_set_literal(rp_set_b));
            std::cout << to_json(replay_lemma_eh(rp_n, a, b)).dump() << "\n";
        }
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const znsum::BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
