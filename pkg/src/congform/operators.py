"""Closure operators on the congruence fibres of a finite universe.

A Universe is a finite set of algebras standing in for a category; the
quotient-closed flag asserts that every quotient of a member is
isomorphic to a member, which is what the subcategory theorems need.
A ClosureOperator stores one extensional map Con(X) -> Con(X) per
member.  Construction validates the two defining laws eagerly:

* extensive: R <= C(R) on every fibre;
* natural:   whenever f lifts R into S, it lifts C(R) into C(S).

Naturality is quantified over the surjections between members when the
universe is quotient-closed (the class of quotient maps, which is all
the subcategory theorems use), and over all homomorphisms otherwise.
The remaining axioms (idempotent, cohereditary, minimal, preservation
of cocartesian liftings) are runtime checks returning witnesses, not
construction requirements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .algebras import (
    Congruence,
    FiniteAlgebra,
    Homomorphism,
    con_lattice,
    diagonal,
    enumerate_homs,
    enumerate_surjections,
    find_isomorphism,
    full,
    identity_hom,
    quotient,
)
from .errors import (
    CheckResult,
    FibreMismatch,
    NotExtensive,
    NotNatural,
    PASSED,
    PreconditionFailed,
    SizeTooLarge,
    UniverseMismatch,
    UniverseNotQuotientClosed,
    failed,
)
from .forms import image_congruence, leq, lifts, preimage_congruence


def _algebra_sort_key(a: FiniteAlgebra):
    return (a.size, a.sig.ops, a.tag or "", a.tables)


@dataclass(frozen=True, repr=False)
class Universe:
    """Deterministically ordered member list; optionally quotient-closed."""

    algebras: tuple[FiniteAlgebra, ...]
    quotient_closed: bool = False

    def __post_init__(self):
        object.__setattr__(
            self, "_hash", hash(tuple(a._hash for a in self.algebras) + (self.quotient_closed,))
        )
        object.__setattr__(
            self, "_index", {a: i for i, a in enumerate(self.algebras)}
        )

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.algebras)

    def __iter__(self):
        return iter(self.algebras)

    def member_index(self, a: FiniteAlgebra) -> Optional[int]:
        return self._index.get(a)

    def __repr__(self):
        flag = ", quotient-closed" if self.quotient_closed else ""
        sizes = [a.size for a in self.algebras]
        return f"Universe({len(self.algebras)} algebras, sizes {sizes}{flag})"


def universe(algebras: Iterable[FiniteAlgebra], *, quotient_closed: bool = False,
             verify: bool = True) -> Universe:
    """Sort, drop literal duplicates, and verify the closure flag if set."""
    members = sorted(set(algebras), key=_algebra_sort_key)
    if not members:
        raise UniverseMismatch("a universe needs at least one algebra")
    u = Universe(tuple(members), quotient_closed)
    if quotient_closed and verify:
        bad = _quotient_closure_witness(u)
        if bad is not None:
            raise UniverseNotQuotientClosed(
                "quotient of a member is not isomorphic to any member", witness=bad
            )
    return u


def _quotient_closure_witness(u: Universe) -> Optional[dict]:
    for i, x in enumerate(u.algebras):
        for r in con_lattice(x):
            q, _ = quotient(x, r)
            if all(find_isomorphism(q, m) is None for m in u.algebras
                   if m.size == q.size):
                return {"algebra": i, "congruence": [list(b) for b in r.blocks()]}
    return None


def universe_from_generators(seeds: Iterable[FiniteAlgebra]) -> Universe:
    """Close the seeds under canonical quotients, up to isomorphism."""
    members: list[FiniteAlgebra] = []
    queue = sorted(set(seeds), key=_algebra_sort_key)
    while queue:
        a = queue.pop(0)
        if any(find_isomorphism(a, m) is not None for m in members if m.size == a.size):
            continue
        members.append(a)
        for r in con_lattice(a):
            q, _ = quotient(a, r)
            if all(find_isomorphism(q, m) is None for m in members if m.size == q.size):
                queue.append(q)
    return universe(members, quotient_closed=True, verify=False)


@lru_cache(maxsize=None)
def find_member_iso(u: Universe, a: FiniteAlgebra) -> tuple[int, Homomorphism]:
    """Member isomorphic to ``a`` plus an isomorphism a -> member."""
    i = u.member_index(a)
    if i is not None:
        return i, identity_hom(a)
    for i, m in enumerate(u.algebras):
        if m.size != a.size:
            continue
        iso = find_isomorphism(a, m)
        if iso is not None:
            return i, iso
    raise UniverseMismatch(
        f"no universe member is isomorphic to {a!r}",
        witness={"size": a.size, "tag": a.tag},
    )


def naturality_maps(u: Universe, x: FiniteAlgebra, y: FiniteAlgebra) -> tuple[Homomorphism, ...]:
    """Maps the lifting law is checked against for this universe."""
    if u.quotient_closed:
        return enumerate_surjections(x, y)
    return enumerate_homs(x, y)


def surjections_in(u: Universe):
    """All surjections between ordered pairs of members."""
    for x in u.algebras:
        for y in u.algebras:
            for f in enumerate_surjections(x, y):
                yield f


Rule = Callable[[FiniteAlgebra, Congruence], Congruence]
FibreTables = Sequence[Mapping[Congruence, Congruence]]


@dataclass(frozen=True, repr=False)
class ClosureOperator:
    """Validated extensive + natural family of fibre maps over a universe."""

    universe: Universe
    name: str
    maps: tuple[tuple[tuple[Congruence, Congruence], ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "_tables", tuple(dict(m) for m in self.maps))

    def fibre(self, i: int) -> dict[Congruence, Congruence]:
        return self._tables[i]

    def apply(self, x: Union[int, FiniteAlgebra], r: Congruence) -> Congruence:
        if isinstance(x, FiniteAlgebra):
            i = self.universe.member_index(x)
            if i is None:
                raise UniverseMismatch("algebra is not a universe member")
        else:
            i = x
        table = self._tables[i]
        if r not in table:
            raise FibreMismatch("congruence is not in the member's lattice")
        return table[r]

    def __call__(self, x, r: Congruence) -> Congruence:
        return self.apply(x, r)

    def __repr__(self):
        return f"ClosureOperator({self.name!r} on {self.universe!r})"


def make_operator(u: Universe, rule: Union[Rule, FibreTables], name: str) -> ClosureOperator:
    """Tabulate ``rule`` over every fibre and verify the two defining laws.

    ``rule`` is either a callable (algebra, congruence) -> congruence or
    a per-member sequence of {congruence: closure} tables.
    """
    tables: list[dict[Congruence, Congruence]] = []
    for i, x in enumerate(u.algebras):
        lattice = con_lattice(x)
        if callable(rule):
            table = {r: rule(x, r) for r in lattice}
        else:
            table = dict(rule[i])
            missing = [r for r in lattice if r not in table]
            if missing:
                raise FibreMismatch(
                    f"operator table for member {i} misses {len(missing)} congruences"
                )
        for r, c in table.items():
            if c.algebra != x:
                raise FibreMismatch("closure value lives on a different algebra")
            if not leq(r, c):
                raise NotExtensive(
                    f"operator {name!r} is not extensive on member {i}",
                    witness={
                        "algebra": i,
                        "congruence": [list(b) for b in r.blocks()],
                        "closure": [list(b) for b in c.blocks()],
                    },
                )
        tables.append(table)

    for i, x in enumerate(u.algebras):
        for j, y in enumerate(u.algebras):
            for f in naturality_maps(u, x, y):
                for r, cr in tables[i].items():
                    for s, cs in tables[j].items():
                        if lifts(f, r, s) and not lifts(f, cr, cs):
                            raise NotNatural(
                                f"operator {name!r} breaks the lifting law",
                                witness={
                                    "dom": i,
                                    "cod": j,
                                    "map": list(f.map),
                                    "R": [list(b) for b in r.blocks()],
                                    "S": [list(b) for b in s.blocks()],
                                },
                            )

    packed = tuple(
        tuple(sorted(t.items(), key=lambda kv: kv[0].ids)) for t in tables
    )
    return ClosureOperator(u, name, packed)


def identity_operator(u: Universe) -> ClosureOperator:
    return make_operator(u, lambda x, r: r, "identity")


def top_operator(u: Universe) -> ClosureOperator:
    return make_operator(u, lambda x, r: full(x), "top")


# --- axiom checkers -----------------------------------------------------------

def _witness(i: int, r: Congruence, **extra) -> dict:
    out = {"algebra": i, "congruence": [list(b) for b in r.blocks()]}
    out.update(extra)
    return out


def is_idempotent(c: ClosureOperator) -> CheckResult:
    """C(C(R)) = C(R) on every fibre."""
    for i in range(len(c.universe)):
        for r, cr in c.fibre(i).items():
            if c.apply(i, cr) != cr:
                return failed(**_witness(i, r))
    return PASSED


def is_cohereditary(c: ClosureOperator) -> CheckResult:
    """C commutes with preimages along every surjection between members."""
    u = c.universe
    for f in surjections_in(u):
        i = u.member_index(f.dom)
        j = u.member_index(f.cod)
        for s in con_lattice(f.cod):
            lhs = c.apply(i, preimage_congruence(f, s))
            rhs = preimage_congruence(f, c.apply(j, s))
            if lhs != rhs:
                return failed(
                    dom=i, cod=j, map=list(f.map),
                    S=[list(b) for b in s.blocks()],
                    lhs=[list(b) for b in lhs.blocks()],
                    rhs=[list(b) for b in rhs.blocks()],
                )
    return PASSED


def is_minimal(c: ClosureOperator) -> CheckResult:
    """C(R v S) = C(R) v S on every fibre."""
    from .algebras import join

    for i, x in enumerate(c.universe.algebras):
        for r in con_lattice(x):
            for s in con_lattice(x):
                if c.apply(i, join(r, s)) != join(c.apply(i, r), s):
                    return failed(**_witness(i, r, second=[list(b) for b in s.blocks()]))
    return PASSED


def preserves_cocartesian(c: ClosureOperator) -> CheckResult:
    """image(f, C(R)) = C(image(f, R)) along every surjection."""
    u = c.universe
    for f in surjections_in(u):
        i = u.member_index(f.dom)
        j = u.member_index(f.cod)
        for r in con_lattice(f.dom):
            lhs = image_congruence(f, c.apply(i, r))
            rhs = c.apply(j, image_congruence(f, r))
            if lhs != rhs:
                return failed(
                    dom=i, cod=j, map=list(f.map),
                    R=[list(b) for b in r.blocks()],
                    lhs=[list(b) for b in lhs.blocks()],
                    rhs=[list(b) for b in rhs.blocks()],
                )
    return PASSED


def operator_leq(c1: ClosureOperator, c2: ClosureOperator) -> CheckResult:
    """C1 <= C2 pointwise on every fibre."""
    if c1.universe != c2.universe:
        raise UniverseMismatch("operator order needs a shared universe")
    for i in range(len(c1.universe)):
        for r, cr in c1.fibre(i).items():
            if not leq(cr, c2.apply(i, r)):
                return failed(**_witness(i, r))
    return PASSED


def strictify(d: ClosureOperator) -> ClosureOperator:
    """Rebuild an idempotent cohereditary operator through its quotients.

    The result closes R by pulling back the closure of the diagonal on
    X/R, so fixed quotients get their congruence back unchanged.  Under
    the canonical congruence encoding this coincides with ``d``
    pointwise; the preconditions are exactly idempotence and coheredity
    and are re-verified here.
    """
    idem = is_idempotent(d)
    if not idem:
        raise PreconditionFailed(
            f"strictify({d.name}) needs an idempotent operator", witness=idem.witness
        )
    cohered = is_cohereditary(d)
    if not cohered:
        raise PreconditionFailed(
            f"strictify({d.name}) needs a cohereditary operator", witness=cohered.witness
        )
    u = d.universe
    if not u.quotient_closed:
        raise UniverseNotQuotientClosed("strictify needs a quotient-closed universe")

    def rule(x: FiniteAlgebra, r: Congruence) -> Congruence:
        q, proj = quotient(x, r)
        i, iso = find_member_iso(u, q)
        closed_diag = preimage_congruence(iso, d.apply(i, diagonal(u.algebras[i])))
        if closed_diag == diagonal(q):
            return r
        return preimage_congruence(proj, closed_diag)

    return make_operator(u, rule, f"strict({d.name})")


def enumerate_operators(u: Universe, *, max_candidates: int = 500_000) -> tuple[ClosureOperator, ...]:
    """Every closure operator on ``u``, by exhausting extensive fibre maps.

    Candidates are the products of per-fibre extensive maps; each is
    validated for naturality, and the survivors are returned in
    deterministic order.  Intended for micro-universes.
    """
    per_member: list[list[tuple[dict, ...]]] = []
    total = 1
    fibre_choices = []
    for x in u.algebras:
        lattice = list(con_lattice(x))
        options_per_r = []
        for r in lattice:
            ups = [s for s in lattice if leq(r, s)]
            options_per_r.append([(r, s) for s in ups])
            total *= len(ups)
        fibre_choices.append(options_per_r)
        if total > max_candidates:
            raise SizeTooLarge(
                f"universe admits more than {max_candidates} extensive families"
            )
    member_tables: list[list[dict]] = []
    for options_per_r in fibre_choices:
        tables = [dict(combo) for combo in itertools.product(*options_per_r)]
        member_tables.append(tables)

    out = []
    for k, combo in enumerate(itertools.product(*member_tables)):
        try:
            out.append(make_operator(u, list(combo), f"op{k}"))
        except NotNatural:
            continue
    return tuple(out)


def operator_report(c: ClosureOperator) -> dict:
    """JSON report of all operator axioms plus witnesses for failures."""
    checks = {
        "idempotent": is_idempotent(c),
        "cohereditary": is_cohereditary(c),
        "minimal": is_minimal(c),
        "preserves_pushouts": preserves_cocartesian(c),
    }
    witnesses = {k: v.witness for k, v in checks.items() if not v.ok}
    return {
        "name": c.name,
        "extensive": True,   # enforced at construction
        "natural": True,     # enforced at construction
        "idempotent": checks["idempotent"].ok,
        "cohereditary": checks["cohereditary"].ok,
        "minimal": checks["minimal"].ok,
        "preserves_pushouts": checks["preserves_pushouts"].ok,
        "witnesses": witnesses,
    }
