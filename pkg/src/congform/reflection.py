"""Reflective subcategories of a universe and their closure operators.

A Reflector stores, for each member X, the reflection congruence rho_X;
the reflection of X is the canonical quotient X/rho_X and the unit is
the projection.  Validation checks the universal property exhaustively:
every homomorphism from X into a member of the subcategory must factor
through the unit, i.e. rho_X <= ker f, and reflections must land in the
subcategory.

The two constructions converting between reflectors and idempotent
cohereditary closure operators are mutually inverse here, and the test
suite checks the round trips pointwise.  Note that operators over a
quotient-closed universe are only validated against surjections, which
admits operators whose congruence family fails the universal property
along some non-surjective map; ``reflector_from_closure`` re-verifies
and reports such a map as a witness instead of returning a broken
reflector.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

from .algebras import (
    Congruence,
    FiniteAlgebra,
    con_lattice,
    diagonal,
    enumerate_homs,
    kernel_congruence,
    meet,
    quotient,
)
from .errors import (
    CheckResult,
    NotCohereditary,
    NotIdempotent,
    NotReflective,
    PASSED,
    UniverseMismatch,
    UniverseNotQuotientClosed,
    failed,
)
from .forms import leq, preimage_congruence
from .operators import (
    ClosureOperator,
    Universe,
    find_member_iso,
    is_cohereditary,
    is_idempotent,
    make_operator,
    operator_leq,
)


@dataclass(frozen=True, repr=False)
class Reflector:
    """Reflection congruences rho_X per universe member."""

    universe: Universe
    name: str
    rho: tuple[Congruence, ...]

    def rho_of(self, x: Union[int, FiniteAlgebra]) -> Congruence:
        if isinstance(x, FiniteAlgebra):
            i = self.universe.member_index(x)
            if i is None:
                raise UniverseMismatch("algebra is not a universe member")
        else:
            i = x
        return self.rho[i]

    def __repr__(self):
        return f"Reflector({self.name!r} on {self.universe!r})"


def make_reflector(u: Universe, rho: Sequence[Congruence], name: str) -> Reflector:
    """Validate values-in-subcategory and the exhaustive universal property."""
    rho = tuple(rho)
    if len(rho) != len(u.algebras):
        raise UniverseMismatch("one reflection congruence per member required")
    for i, (x, r) in enumerate(zip(u.algebras, rho)):
        if r.algebra != x:
            raise UniverseMismatch(f"rho[{i}] lives on a different algebra")
    members_in = [i for i, r in enumerate(rho) if r == diagonal(u.algebras[i])]
    # reflections land in the subcategory
    for i, x in enumerate(u.algebras):
        q, _ = quotient(x, rho[i])
        try:
            j, iso = find_member_iso(u, q)
        except UniverseMismatch:
            raise NotReflective(
                f"reflector {name!r}: reflection of member {i} leaves the universe",
                witness={"algebra": i,
                         "rho": [list(b) for b in rho[i].blocks()]},
            )
        if preimage_congruence(iso, rho[j]) != diagonal(q):
            raise NotReflective(
                f"reflector {name!r}: reflection of member {i} is not in the subcategory",
                witness={"algebra": i, "reflection_member": j},
            )
    # universal property: maps into the subcategory factor through the unit
    for i, x in enumerate(u.algebras):
        for j in members_in:
            for f in enumerate_homs(x, u.algebras[j]):
                if not leq(rho[i], kernel_congruence(f)):
                    raise NotReflective(
                        f"reflector {name!r}: a map from member {i} into member {j} "
                        "does not factor through the unit",
                        witness={"dom": i, "cod": j, "map": list(f.map),
                                 "rho": [list(b) for b in rho[i].blocks()]},
                    )
    return Reflector(u, name, rho)


def closure_from_reflector(refl: Reflector) -> ClosureOperator:
    """C_X(R) pulls the reflection congruence of X/R back along the projection."""
    u = refl.universe
    if not u.quotient_closed:
        raise UniverseNotQuotientClosed(
            "deriving a closure operator requires a quotient-closed universe"
        )

    def rule(x: FiniteAlgebra, r: Congruence) -> Congruence:
        q, proj = quotient(x, r)
        j, iso = find_member_iso(u, q)
        rho_q = preimage_congruence(iso, refl.rho[j])
        return preimage_congruence(proj, rho_q)

    return make_operator(u, rule, refl.name)


def reflector_from_closure(c: ClosureOperator) -> Reflector:
    """rho_X = C_X(diagonal); requires an idempotent cohereditary operator."""
    idem = is_idempotent(c)
    if not idem:
        raise NotIdempotent(
            f"operator {c.name!r} is not idempotent", witness=idem.witness
        )
    cohered = is_cohereditary(c)
    if not cohered:
        raise NotCohereditary(
            f"operator {c.name!r} is not cohereditary", witness=cohered.witness
        )
    rho = tuple(c.apply(i, diagonal(x)) for i, x in enumerate(c.universe.algebras))
    return make_reflector(c.universe, rho, c.name)


def membership(ref: Union[ClosureOperator, Reflector], x: FiniteAlgebra) -> bool:
    """Is X in the subcategory, i.e. is its diagonal closed?"""
    if isinstance(ref, Reflector):
        return ref.rho_of(x) == diagonal(x)
    return ref.apply(x, diagonal(x)) == diagonal(x)


def subcategory_members(ref: Union[ClosureOperator, Reflector]) -> tuple[FiniteAlgebra, ...]:
    return tuple(x for x in ref.universe.algebras if membership(ref, x))


@dataclass(frozen=True)
class SubcategoryPredicate:
    """Named isomorphism-invariant membership test for algebras."""

    name: str
    accepts: Callable[[FiniteAlgebra], bool]

    def __call__(self, x: FiniteAlgebra) -> bool:
        return bool(self.accepts(x))


def predicate_from_equations(name: str, eqs) -> SubcategoryPredicate:
    from .terms import satisfies_equations

    return SubcategoryPredicate(name, lambda x: bool(satisfies_equations(x, eqs)))


def predicate_from_quasiequations(name: str, qeqs) -> SubcategoryPredicate:
    from .terms import satisfies_quasiequations

    return SubcategoryPredicate(name, lambda x: bool(satisfies_quasiequations(x, qeqs)))


def predicate_from_operator(c: ClosureOperator) -> SubcategoryPredicate:
    """Membership via the matched universe member's closed diagonal."""

    def accepts(x: FiniteAlgebra) -> bool:
        i, _ = find_member_iso(c.universe, x)
        return membership(c, c.universe.algebras[i])

    return SubcategoryPredicate(c.name, accepts)


def closed_under_quotients(pred: SubcategoryPredicate, u: Universe) -> CheckResult:
    """Every quotient of a member satisfying ``pred`` satisfies it too."""
    for i, x in enumerate(u.algebras):
        if not pred(x):
            continue
        for r in con_lattice(x):
            q, _ = quotient(x, r)
            if not pred(q):
                return failed(
                    predicate=pred.name, algebra=i,
                    congruence=[list(b) for b in r.blocks()],
                )
    return PASSED


def roundtrip_closure(c: ClosureOperator) -> CheckResult:
    """closure -> reflector -> closure is the pointwise identity."""
    back = closure_from_reflector(reflector_from_closure(c))
    for i in range(len(c.universe)):
        for r, cr in c.fibre(i).items():
            if back.apply(i, r) != cr:
                return failed(
                    operator=c.name, algebra=i,
                    congruence=[list(b) for b in r.blocks()],
                    expected=[list(b) for b in cr.blocks()],
                    got=[list(b) for b in back.apply(i, r).blocks()],
                )
    return PASSED


def roundtrip_reflector(refl: Reflector) -> CheckResult:
    """reflector -> closure -> reflector reproduces every rho_X."""
    back = reflector_from_closure(closure_from_reflector(refl))
    for i in range(len(refl.universe)):
        if back.rho[i] != refl.rho[i]:
            return failed(
                reflector=refl.name, algebra=i,
                expected=[list(b) for b in refl.rho[i].blocks()],
                got=[list(b) for b in back.rho[i].blocks()],
            )
    return PASSED


def antitone_check(c1: ClosureOperator, c2: ClosureOperator) -> CheckResult:
    """operator order iff reversed subcategory inclusion."""
    lo = bool(operator_leq(c1, c2))
    members1 = set(subcategory_members(c1))
    members2 = set(subcategory_members(c2))
    included = members2 <= members1
    if lo == included:
        return PASSED
    return failed(
        first=c1.name, second=c2.name, operator_leq=lo, subcategory_reversed=included,
    )


def oracle_reflection(x: FiniteAlgebra, pred: SubcategoryPredicate) -> Congruence:
    """Least congruence whose quotient satisfies ``pred``, by lattice scan.

    The meet of all valid congruences is taken and then re-checked, so a
    predicate that fails to be reflective on this algebra raises with
    the offending meet as witness instead of returning a wrong answer.
    """
    good = [r for r in con_lattice(x)
            if pred(quotient(x, r)[0])]
    if not good:
        raise NotReflective(
            f"predicate {pred.name!r} accepts no quotient of the algebra",
            witness={"predicate": pred.name},
        )
    least = good[0]
    for r in good[1:]:
        least = meet(least, r)
    if not pred(quotient(x, least)[0]):
        raise NotReflective(
            f"predicate {pred.name!r} is not reflective here: the meet of its "
            "congruences fails it",
            witness={"predicate": pred.name,
                     "meet": [list(b) for b in least.blocks()]},
        )
    return least


def oracle_reflector(u: Universe, pred: SubcategoryPredicate,
                     name: Optional[str] = None) -> Reflector:
    """Ground-truth reflector built member by member from the oracle."""
    rho = tuple(oracle_reflection(x, pred) for x in u.algebras)
    return make_reflector(u, rho, name or f"oracle({pred.name})")
