#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "znsum/bounds.hpp"
#include "znsum/enumerate.hpp"
#include "znsum/report.hpp"
#include "znsum/sums.hpp"
#include "znsum/zn.hpp"

namespace znsum {

/// Exhaustive campaigns larger than this are refused unless overridden;
/// keeps desk-scale runs honest about what they can actually enumerate.
inline constexpr uint64_t kDefaultBudget = 1'000'000'000;

enum class Mode { exhaustive, sampled };
std::string_view mode_name(Mode m);
Mode mode_from_name(std::string_view name);

struct BudgetError : std::runtime_error {
    uint64_t required;
    explicit BudgetError(uint64_t req);
};

struct CampaignConfig {
    Mode mode = Mode::exhaustive;
    uint64_t trials = 10'000;      // sampled mode only; must be >= 1 there
    uint64_t seed = 0;             // sampled mode only
    uint32_t jobs = 1;
    std::optional<std::pair<uint64_t, uint64_t>> rank_range;  // verify_theorem only
    uint64_t budget = kDefaultBudget;
    bool budget_override = false;
};

// Campaigns. Each returns a per-modulus report whose content is independent
// of the worker count: exhaustive instances are reconstructed from their flat
// rank, sampled instances from (seed, trial index), and partial results merge
// by a commutative fold with canonical witness order.

/// Tests completeness of every unit subset of size main_threshold(n).
/// Supersets are covered by closure monotonicity, so one binomial slice
/// suffices. Vacuous (flagged, not an error) when the threshold exceeds phi(n).
AuditReport verify_theorem(uint32_t n, const CampaignConfig& cfg = {});

/// Tests |k-fold-sums(A, k)| = n at |A| = conjecture size. Violations are
/// reported, never assumed absent; no monotonicity pruning applies here.
AuditReport check_conjecture(uint32_t n, const CampaignConfig& cfg = {});

/// |X+Y| >= min(n, |X|+|Y|-1) over nonempty X and Y containing 0 with
/// Y \ {0} all units.
AuditReport audit_chowla(uint32_t n, const CampaignConfig& cfg = {});

/// The five translate-escape identities: eq1 closure-growth inequality,
/// eq2 closure-growth equality, eq3 symmetry, eq4 subadditivity, eq5 the
/// sum lower bound |B|(|C|-|B|+1) over 0-free C.
AuditReport audit_olson_identities(uint32_t n, const CampaignConfig& cfg = {});

/// Evaluates alpha = max translate escape over antisymmetric unit A against
/// the printed strict bound (eq6) and the a-1 corollary (eq7). Failures are
/// findings, not violations: this auditor maps where the printed bounds hold.
AuditReport audit_lemma_eh(uint32_t n, const CampaignConfig& cfg = {});

/// 2|S_A^0| >= min(n+2, 6+|A|(|A|-1)) over antisymmetric unit A, |A| >= 2.
AuditReport audit_mainlemma(uint32_t n, const CampaignConfig& cfg = {});

/// |S_X^0| + |S_Y^0| <= n+1 over incomplete unit A and disjoint nonempty
/// X, Y inside A.
AuditReport audit_final_inequality(uint32_t n, const CampaignConfig& cfg = {});

struct MaxIncompleteResult {
    uint32_t size;
    ResidueSet witness;
};

/// Largest s for which an incomplete unit subset of size s exists, with the
/// colex-first witness; descends from phi(n) exhaustively. Throws BudgetError
/// when a level is too large to exhaust.
MaxIncompleteResult max_incomplete_size(uint32_t n,
                                        uint64_t budget = kDefaultBudget,
                                        bool budget_override = false);

/// Splits a unit set into halves of size ceil/floor(|A|/2) with each half
/// disjoint from its own negation: the smaller of each {x, -x} pair goes
/// left, the larger right, then unpaired elements fill the left half to its
/// target size in ascending order. Requires n >= 3 and unit-only A.
std::pair<ResidueSet, ResidueSet> antisymmetric_partition(const ResidueSet& a);

/// Replay of the completeness argument on one instance.
struct MainProofTrace {
    uint32_t n = 0;
    uint32_t k = 0;
    bool hypothesis_met = false;    // (k-1)^2 + 16 > 4n, size above threshold
    bool premise_incomplete = false;  // the argument assumes A incomplete
    std::string a1, a2;             // partition halves, set literals
    uint32_t s0_a1 = 0, s0_a2 = 0;  // closure sizes of the halves
    uint64_t eq9_lhs = 0;           // 6 + floor(k/2)(floor(k/2)-1)
    uint64_t eq9_rhs = 0;           // n + 2
    bool eq9_holds = false;         // forced when A is incomplete
    bool k_even = false;
    // even case: the direct contradiction
    uint64_t case_even_lhs = 0;  // (k-1)^2 + 16
    uint64_t case_even_rhs = 0;  // 4n
    bool case_even_contradiction = false;
    // odd case: move the best translate-escape element across the partition
    uint32_t half = 0;  // (k-1)/2
    uint32_t y = 0;
    uint32_t lambda_y = 0;
    std::string c1, c2;
    uint32_t s0_c1 = 0, s0_c2 = 0;
    uint64_t pair_sum = 0;    // |S_C1^0| + |S_C2^0|
    uint64_t pair_bound = 0;  // n + 1
    bool pair_within_bound = false;
};

MainProofTrace replay_main_proof(uint32_t n, const ResidueSet& a);

/// Replay of the translate-escape lower-bound argument on one instance.
struct LemmaEhTrace {
    uint32_t n = 0;
    uint32_t a = 0, b = 0;
    int64_t t = 0;  // 2b - 3
    uint32_t m = 0, r = 0;  // t = 2ma + r, 0 <= r <= 2a-1
    bool ok = false;
    std::string side_condition;  // failure reason when !ok
    std::string a_star;          // A u (-A) u {0}
    std::vector<uint32_t> layer_sizes;   // |jA*| for j = 1..m(+1 if r > 0)
    std::vector<uint32_t> layer_floors;  // min(n, 2ja+1)
    bool layers_ok = false;
    std::string c;  // the t+1 element set built layer by layer
    uint32_t alpha = 0;
    uint64_t sum_lambda = 0;            // over E = C \ {0}
    uint64_t mid_bound = 0;             // alpha (m+1)(ma+r)
    uint64_t upper_num = 0, upper_den = 0;  // alpha (t+a)^2 / 4a, exact rational
    uint64_t lower_bound = 0;           // b(t-b+1)
    bool sum_le_mid = false;
    bool mid_le_upper = false;
    bool sum_ge_lower = false;
};

LemmaEhTrace replay_lemma_eh(uint32_t n, const ResidueSet& a, const ZnSet& b);

json to_json(const MainProofTrace& t);
json to_json(const LemmaEhTrace& t);

/// Recomputes a witness's lhs/rhs from its stored set literals (brute-force
/// subset enumeration when small enough) and confirms both the stored values
/// and that the claimed relation still fails.
bool revalidate_witness(const Witness& w);

}  // namespace znsum
