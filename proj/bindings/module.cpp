#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "znsum/bounds.hpp"
#include "znsum/sums.hpp"
#include "znsum/verify.hpp"
#include "znsum/zn.hpp"

namespace py = pybind11;
using namespace znsum;

namespace {

ResidueSet residues(uint32_t n, const std::vector<uint32_t>& elems) {
    return ResidueSet(Modulus(n), elems);
}

ZnSet dense(uint32_t n, const std::vector<uint32_t>& elems) {
    return ZnSet::from_elements(Modulus(n), elems);
}

CampaignConfig config(const std::string& mode, uint64_t trials, uint64_t seed,
                      uint32_t jobs, uint64_t budget, bool override_budget) {
    CampaignConfig cfg;
    cfg.mode = mode_from_name(mode);
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.jobs = jobs;
    cfg.budget = budget;
    cfg.budget_override = override_budget;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "subset-sum arithmetic in Z_n with completeness audits";

    m.def("units",
          [](uint32_t n) { return units(Modulus(n)).elements(); },
          py::arg("n"));
    m.def("euler_phi", &euler_phi, py::arg("n"));
    m.def(
        "shift",
        [](uint32_t n, const std::vector<uint32_t>& s, uint32_t x) {
            return shift(dense(n, s), x).elements();
        },
        py::arg("n"), py::arg("elements"), py::arg("x"));
    m.def(
        "negate",
        [](uint32_t n, const std::vector<uint32_t>& s) {
            return negate(dense(n, s)).elements();
        },
        py::arg("n"), py::arg("elements"));
    m.def(
        "subgroup_generated",
        [](uint32_t n, const std::vector<uint32_t>& a) {
            return subgroup_generated(residues(n, a)).elements();
        },
        py::arg("n"), py::arg("elements"));
    m.def(
        "sumset",
        [](uint32_t n, const std::vector<uint32_t>& x,
           const std::vector<uint32_t>& y) {
            return sumset(dense(n, x), dense(n, y)).elements();
        },
        py::arg("n"), py::arg("x"), py::arg("y"));
    m.def(
        "subset_sums",
        [](uint32_t n, const std::vector<uint32_t>& a) {
            auto cp = subset_sums(residues(n, a));
            return py::make_tuple(cp.s.elements(), cp.s0.elements());
        },
        py::arg("n"), py::arg("elements"),
        "returns (nonempty sums, sums with 0)");
    m.def(
        "k_fold_sums",
        [](uint32_t n, const std::vector<uint32_t>& a, uint32_t k) {
            return k_fold_sums(residues(n, a), k).elements();
        },
        py::arg("n"), py::arg("elements"), py::arg("k"));
    m.def(
        "lambda_",
        [](uint32_t n, const std::vector<uint32_t>& b, uint32_t x) {
            return lambda(dense(n, b), x);
        },
        py::arg("n"), py::arg("b"), py::arg("x"),
        "translate escape |(B+x) \\ B|");
    m.def(
        "is_complete",
        [](uint32_t n, const std::vector<uint32_t>& a) {
            return is_complete(residues(n, a));
        },
        py::arg("n"), py::arg("elements"));

    m.def("main_threshold", &main_threshold, py::arg("n"));
    m.def("olson_threshold", &olson_threshold, py::arg("p"));
    m.def("chowla_bound", &chowla_bound, py::arg("n"), py::arg("sx"),
          py::arg("sy"));
    m.def("mainlemma_bound_holds", &mainlemma_bound_holds, py::arg("n"),
          py::arg("a"), py::arg("s0_size"));
    m.def("lamb_bound_holds", &lamb_bound_holds, py::arg("a"), py::arg("b"),
          py::arg("alpha"));
    m.def(
        "conjecture_params",
        [](uint32_t n) {
            auto [k, ms] = conjecture_params(n);
            return py::make_tuple(k, ms);
        },
        py::arg("n"), "returns (k, min_size)");

    m.def(
        "antisymmetric_partition",
        [](uint32_t n, const std::vector<uint32_t>& a) {
            auto [a1, a2] = antisymmetric_partition(residues(n, a));
            return py::make_tuple(a1.elements(), a2.elements());
        },
        py::arg("n"), py::arg("elements"));
    m.def(
        "max_incomplete_size",
        [](uint32_t n, uint64_t budget, bool override_budget) {
            auto r = max_incomplete_size(n, budget, override_budget);
            return py::make_tuple(r.size, r.witness.elements());
        },
        py::arg("n"), py::arg("budget") = kDefaultBudget,
        py::arg("override_budget") = false);

    auto def_campaign = [&m](const char* name, auto fn) {
        m.def(
            name,
            [fn](uint32_t n, const std::string& mode, uint64_t trials,
                 uint64_t seed, uint32_t jobs, uint64_t budget,
                 bool override_budget) {
                return to_json(fn(n, config(mode, trials, seed, jobs, budget,
                                            override_budget)))
                    .dump();
            },
            py::arg("n"), py::arg("mode") = "exhaustive",
            py::arg("trials") = 10000, py::arg("seed") = 0,
            py::arg("jobs") = 1, py::arg("budget") = kDefaultBudget,
            py::arg("override_budget") = false);
    };
    def_campaign("verify_theorem_json", &verify_theorem);
    def_campaign("check_conjecture_json", &check_conjecture);
    def_campaign("audit_chowla_json", &audit_chowla);
    def_campaign("audit_olson_identities_json", &audit_olson_identities);
    def_campaign("audit_lemma_eh_json", &audit_lemma_eh);
    def_campaign("audit_mainlemma_json", &audit_mainlemma);
    def_campaign("audit_final_inequality_json", &audit_final_inequality);

    m.def(
        "replay_main_proof_json",
        [](uint32_t n, const std::vector<uint32_t>& a) {
            return to_json(replay_main_proof(n, residues(n, a))).dump();
        },
        py::arg("n"), py::arg("a"));
    m.def(
        "replay_lemma_eh_json",
        [](uint32_t n, const std::vector<uint32_t>& a,
           const std::vector<uint32_t>& b) {
            return to_json(replay_lemma_eh(n, residues(n, a), dense(n, b)))
                .dump();
        },
        py::arg("n"), py::arg("a"), py::arg("b"));

    py::register_exception<BudgetError>(m, "BudgetError");
}
