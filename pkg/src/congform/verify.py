"""Corpus-level verification: run every theorem check and collect a report.

This backs the ``verify-all`` CLI command and the verification scripts.
For one corpus it exercises, per built-in operator: the reflection
round-trips, the axiom suite on reflection-derived operators, the
minimal/cocartesian equivalence, the minimality/quotient-closure
equivalence, the antitone operator order, and agreement with the
brute-force reflection oracle.
"""

from __future__ import annotations

from typing import Optional

from . import terms
from .algebras import con_lattice
from .errors import CheckResult, PASSED, failed
from .instances import builtin_operator, corpus
from .operators import (
    ClosureOperator,
    is_cohereditary,
    is_idempotent,
    is_minimal,
    operator_report,
    preserves_cocartesian,
)
from .reflection import (
    SubcategoryPredicate,
    antitone_check,
    closed_under_quotients,
    closure_from_reflector,
    oracle_reflector,
    predicate_from_equations,
    predicate_from_operator,
    predicate_from_quasiequations,
    reflector_from_closure,
    roundtrip_closure,
    roundtrip_reflector,
)

DEFAULT_MAX_SIZE = {"groups": 8, "rngs": 12, "quandles": 3}

OPERATORS_BY_KIND = {
    "groups": ("identity", "top", "abelianization", "exp2-abelianization"),
    "rngs": ("identity", "top", "nilradical"),
    "quandles": ("identity", "top", "quandle"),
}


def oracle_predicate(name: str) -> SubcategoryPredicate:
    """Independent membership predicate for each built-in operator."""
    if name == "identity":
        return predicate_from_equations("everything", ())
    if name == "top":
        return predicate_from_equations("one-element", terms.ONE_ELEMENT)
    if name == "nilradical":
        return predicate_from_quasiequations("reduced", terms.REDUCED_RNG)
    if name == "quandle":
        return predicate_from_equations("trivial-quandle", terms.TRIVIAL_QUANDLE)
    if name == "abelianization":
        return predicate_from_equations("abelian", terms.COMMUTATIVITY)
    if name == "exp2-abelianization":
        return predicate_from_equations("elementary-abelian-2", terms.ELEMENTARY_ABELIAN_2)
    raise ValueError(f"no oracle predicate for operator {name!r}")


def _pointwise_equal(c1: ClosureOperator, c2: ClosureOperator) -> CheckResult:
    for i, x in enumerate(c1.universe.algebras):
        for r in con_lattice(x):
            if c1.apply(i, r) != c2.apply(i, r):
                return failed(
                    algebra=i, congruence=[list(b) for b in r.blocks()],
                    first=[list(b) for b in c1.apply(i, r).blocks()],
                    second=[list(b) for b in c2.apply(i, r).blocks()],
                )
    return PASSED


def run_verification(kind: str, max_size: Optional[int] = None) -> dict:
    """Full theorem suite for one corpus; the report's ``pass`` key sums it up."""
    if max_size is None:
        max_size = DEFAULT_MAX_SIZE[kind]
    u = corpus(kind, max_size)
    names = OPERATORS_BY_KIND[kind]
    operators = {name: builtin_operator(name, u) for name in names}

    report: dict = {
        "corpus": {"kind": kind, "max_size": max_size, "members": len(u)},
        "operators": {name: operator_report(c) for name, c in operators.items()},
        "theorems": {},
    }

    # reflection-derived operators satisfy the closure operator axioms
    axiom_items = {}
    derived = {}
    for name, c in operators.items():
        d = closure_from_reflector(reflector_from_closure(c))
        derived[name] = d
        axiom_items[name] = {
            "extensive": True,
            "natural": True,
            "idempotent": is_idempotent(d).as_json(),
            "cohereditary": is_cohereditary(d).as_json(),
        }
    report["theorems"]["axiom_suite"] = {
        "pass": all(v["idempotent"]["ok"] and v["cohereditary"]["ok"]
                    for v in axiom_items.values()),
        "operators": axiom_items,
    }

    # minimality coincides with preservation of cocartesian liftings
    mp_items = {}
    for name, c in operators.items():
        if not (is_idempotent(c) and is_cohereditary(c)):
            continue
        mp_items[name] = {
            "minimal": bool(is_minimal(c)),
            "preserves_pushouts": bool(preserves_cocartesian(c)),
        }
    report["theorems"]["minimality_pushout_equivalence"] = {
        "pass": all(v["minimal"] == v["preserves_pushouts"] for v in mp_items.values()),
        "operators": mp_items,
    }

    # both round trips are pointwise identities
    rt_items = {}
    for name, c in operators.items():
        rt_items[name] = {
            "closure": roundtrip_closure(c).as_json(),
            "reflector": roundtrip_reflector(reflector_from_closure(c)).as_json(),
        }
    report["theorems"]["roundtrip_identities"] = {
        "pass": all(v["closure"]["ok"] and v["reflector"]["ok"] for v in rt_items.values()),
        "operators": rt_items,
    }

    # minimal operators are exactly the quotient-closed subcategories
    bir_items = {}
    for name, c in operators.items():
        minimal = bool(is_minimal(c))
        closed = bool(closed_under_quotients(predicate_from_operator(c), u))
        bir_items[name] = {"minimal": minimal, "closed_under_quotients": closed}
    report["theorems"]["birkhoff_equivalence"] = {
        "pass": all(v["minimal"] == v["closed_under_quotients"] for v in bir_items.values()),
        "operators": bir_items,
    }

    # operator order is opposite to subcategory inclusion, on every ordered pair
    ant_items = {}
    for a in names:
        for b in names:
            if a == b:
                continue
            ant_items[f"{a} / {b}"] = antitone_check(operators[a], operators[b]).as_json()
    report["theorems"]["antitone_order"] = {
        "pass": all(v["ok"] for v in ant_items.values()),
        "pairs": ant_items,
    }

    # built-in rules agree with the brute-force reflection oracle
    ora_items = {}
    for name, c in operators.items():
        oracle_c = closure_from_reflector(oracle_reflector(u, oracle_predicate(name)))
        ora_items[name] = _pointwise_equal(c, oracle_c).as_json()
    report["theorems"]["oracle_agreement"] = {
        "pass": all(v["ok"] for v in ora_items.values()),
        "operators": ora_items,
    }

    report["pass"] = all(t["pass"] for t in report["theorems"].values())
    return report
