"""Subset-sum arithmetic in Z_n: closures, restricted k-fold sums,
completeness thresholds, and audit campaigns over the classical sumset
bounds. Thin wrapper over the C++ core."""

import json as _json

from ._core import (  # noqa: F401
    BudgetError,
    antisymmetric_partition,
    chowla_bound,
    conjecture_params,
    euler_phi,
    is_complete,
    k_fold_sums,
    lamb_bound_holds,
    lambda_,
    main_threshold,
    mainlemma_bound_holds,
    max_incomplete_size,
    negate,
    olson_threshold,
    shift,
    subgroup_generated,
    subset_sums,
    sumset,
    units,
)
from . import _core as _c

__all__ = [
    "BudgetError",
    "antisymmetric_partition",
    "audit_chowla",
    "audit_final_inequality",
    "audit_lemma_eh",
    "audit_mainlemma",
    "audit_olson_identities",
    "check_conjecture",
    "chowla_bound",
    "conjecture_params",
    "euler_phi",
    "is_complete",
    "k_fold_sums",
    "lamb_bound_holds",
    "lambda_",
    "main_threshold",
    "mainlemma_bound_holds",
    "max_incomplete_size",
    "negate",
    "olson_threshold",
    "replay_lemma_eh",
    "replay_main_proof",
    "shift",
    "subgroup_generated",
    "subset_sums",
    "sumset",
    "units",
    "verify_theorem",
]


def _campaign(json_fn):
    def run(n, mode="exhaustive", trials=10000, seed=0, jobs=1,
            budget=10**9, override_budget=False):
        return _json.loads(
            json_fn(n, mode, trials, seed, jobs, budget, override_budget))

    run.__name__ = json_fn.__name__.removesuffix("_json")
    run.__doc__ = "Returns the audit report as a dict; see the CLI schema."
    return run


verify_theorem = _campaign(_c.verify_theorem_json)
check_conjecture = _campaign(_c.check_conjecture_json)
audit_chowla = _campaign(_c.audit_chowla_json)
audit_olson_identities = _campaign(_c.audit_olson_identities_json)
audit_lemma_eh = _campaign(_c.audit_lemma_eh_json)
audit_mainlemma = _campaign(_c.audit_mainlemma_json)
audit_final_inequality = _campaign(_c.audit_final_inequality_json)


def replay_main_proof(n, a):
    """Trace of the partition-and-move argument on one instance."""
    return _json.loads(_c.replay_main_proof_json(n, a))


def replay_lemma_eh(n, a, b):
    """Trace of the translate-escape lower-bound argument on one instance."""
    return _json.loads(_c.replay_lemma_eh_json(n, a, b))
