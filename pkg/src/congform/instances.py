"""Concrete algebras, corpora, and the built-in closure operators.

Three families of examples are bundled:

* commutative rngs Z_n with the nilradical operator, connected to
  congruences through the ideal/coset bridge;
* quandles with the reachability congruence ~ and the operator sending
  R to the relation composite R o ~, which is validated (not assumed)
  to be a congruence;
* finite groups with the abelianization operator R -> R v [X,X] and its
  exponent-2 refinement.

Corpora are quotient-closed universes: rngs come from the explicit Z_n
family, groups of size <= 6 and quandles are found by exhaustive table
search (groups 7..12 fall back to cyclic/dihedral/symmetric families
plus the Klein four-group, which dihedral quotients require).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .algebras import (
    COMMUTATIVE_RNG_SIGNATURE,
    Congruence,
    FiniteAlgebra,
    GROUP_SIGNATURE,
    GROUP_TAG,
    QUANDLE_SIGNATURE,
    QUANDLE_TAG,
    RNG_TAG,
    _canonical_ids,
    algebra_to_json,
    canonical_algebra,
    con_lattice,
    find_isomorphism,
    full,
    generated_congruence,
    is_compatible,
    join,
    validate_algebra,
)
from .errors import (
    CompositeNotCongruence,
    InvalidIdeal,
    NotGroup,
    NotQuandle,
    NotRng,
    OutOfRange,
    SizeTooLarge,
)
from .operators import ClosureOperator, Universe, make_operator, universe

# --- named algebra builders ---------------------------------------------------

@lru_cache(maxsize=None)
def cyclic_group(n: int) -> FiniteAlgebra:
    mul = [[(i + j) % n for j in range(n)] for i in range(n)]
    inv = [(-i) % n for i in range(n)]
    return validate_algebra(n, GROUP_SIGNATURE, {"mul": mul, "inv": inv, "e": 0}, GROUP_TAG)


@lru_cache(maxsize=None)
def klein_four_group() -> FiniteAlgebra:
    mul = [[i ^ j for j in range(4)] for i in range(4)]
    return validate_algebra(4, GROUP_SIGNATURE,
                            {"mul": mul, "inv": list(range(4)), "e": 0}, GROUP_TAG)


@lru_cache(maxsize=None)
def dihedral_group(n: int) -> FiniteAlgebra:
    """Order 2n; 0..n-1 are rotations r^i, n..2n-1 are reflections s r^i."""
    if n < 1:
        raise OutOfRange("dihedral group needs n >= 1")

    def mul(x: int, y: int) -> int:
        e1 = 0 if x < n else 1
        a1 = x if x < n else x - n
        e2 = 0 if y < n else 1
        a2 = y if y < n else y - n
        a = (a1 * (-1 if e2 else 1) + a2) % n
        return ((e1 + e2) % 2) * n + a

    table = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    inv = [((-x) % n) if x < n else x for x in range(2 * n)]
    return validate_algebra(2 * n, GROUP_SIGNATURE,
                            {"mul": table, "inv": inv, "e": 0}, GROUP_TAG)


@lru_cache(maxsize=None)
def symmetric_group(k: int) -> FiniteAlgebra:
    """Permutations of {0..k-1} in lexicographic order; (p*q)(x) = p(q(x))."""
    perms = sorted(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    mul = [[index[tuple(p[q[x]] for x in range(k))] for q in perms] for p in perms]
    inv = []
    for p in perms:
        ip = [0] * k
        for x in range(k):
            ip[p[x]] = x
        inv.append(index[tuple(ip)])
    return validate_algebra(len(perms), GROUP_SIGNATURE,
                            {"mul": mul, "inv": inv, "e": index[tuple(range(k))]},
                            GROUP_TAG)


@lru_cache(maxsize=None)
def cyclic_rng(n: int) -> FiniteAlgebra:
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    mul = [[(i * j) % n for j in range(n)] for i in range(n)]
    neg = [(-i) % n for i in range(n)]
    return validate_algebra(n, COMMUTATIVE_RNG_SIGNATURE,
                            {"add": add, "neg": neg, "zero": 0, "mul": mul}, RNG_TAG)


@lru_cache(maxsize=None)
def trivial_quandle(n: int) -> FiniteAlgebra:
    t = [[x for _ in range(n)] for x in range(n)]
    return validate_algebra(n, QUANDLE_SIGNATURE, {"lhd": t, "lhd_inv": t}, QUANDLE_TAG)


@lru_cache(maxsize=None)
def dihedral_quandle(n: int) -> FiniteAlgebra:
    """x <| y = 2y - x mod n; an involution, so <| and its inverse agree."""
    t = [[(2 * y - x) % n for y in range(n)] for x in range(n)]
    return validate_algebra(n, QUANDLE_SIGNATURE, {"lhd": t, "lhd_inv": t}, QUANDLE_TAG)


# --- exhaustive table enumeration ---------------------------------------------

def enumerate_groups(n: int) -> list[FiniteAlgebra]:
    """All group tables on {0..n-1} with identity 0, in search order.

    Latin-square backtracking with incremental associativity pruning;
    complete up to isomorphism since every group can be relabeled to put
    its identity at 0.
    """
    table = [[None] * n for _ in range(n)]
    for j in range(n):
        table[0][j] = j
        table[j][0] = j
    row_used = [set(v for v in row if v is not None) for row in table]
    col_used = [set(table[i][j] for i in range(n) if table[i][j] is not None)
                for j in range(n)]
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    out: list[FiniteAlgebra] = []

    def assoc_ok() -> bool:
        for a in range(1, n):
            for b in range(1, n):
                ab = table[a][b]
                if ab is None:
                    continue
                for c in range(1, n):
                    bc = table[b][c]
                    abc1 = table[ab][c]
                    if bc is None or abc1 is None:
                        continue
                    abc2 = table[a][bc]
                    if abc2 is not None and abc1 != abc2:
                        return False
        return True

    def emit():
        inv = [next(b for b in range(n) if table[a][b] == 0) for a in range(n)]
        out.append(validate_algebra(
            n, GROUP_SIGNATURE,
            {"mul": [row[:] for row in table], "inv": inv, "e": 0}, GROUP_TAG))

    def dfs(k: int):
        if k == len(cells):
            emit()
            return
        i, j = cells[k]
        for v in range(n):
            if v in row_used[i] or v in col_used[j]:
                continue
            table[i][j] = v
            row_used[i].add(v)
            col_used[j].add(v)
            if assoc_ok():
                dfs(k + 1)
            table[i][j] = None
            row_used[i].remove(v)
            col_used[j].remove(v)

    dfs(0)
    return out


def enumerate_quandles(n: int) -> list[FiniteAlgebra]:
    """All quandle tables on {0..n-1}, in search order.

    Columns are the right translations x -> x <| b, which must be
    permutations fixing b; self-distributivity says the column at
    sigma_c(b) is the conjugate sigma_c sigma_b sigma_c^-1, which the
    search uses to force columns early.
    """
    perms_fixing = [
        [p for p in itertools.permutations(range(n)) if p[b] == b]
        for b in range(n)
    ]
    cols: list[Optional[tuple[int, ...]]] = [None] * n
    out: list[FiniteAlgebra] = []

    def conj(pc: tuple[int, ...], pb: tuple[int, ...]) -> tuple[int, ...]:
        res = [0] * n
        for x in range(n):
            res[pc[x]] = pc[pb[x]]
        return tuple(res)

    def propagate(queue: list[int]) -> bool:
        while queue:
            b = queue.pop()
            for c in range(n):
                if cols[c] is None:
                    continue
                for (u, v) in ((b, c), (c, b)):
                    d = cols[v][u]
                    forced = conj(cols[v], cols[u])
                    if cols[d] is None:
                        cols[d] = forced
                        queue.append(d)
                    elif cols[d] != forced:
                        return False
        return True

    def emit():
        lhd = [[cols[y][x] for y in range(n)] for x in range(n)]
        inv_cols = []
        for y in range(n):
            ic = [0] * n
            for x in range(n):
                ic[cols[y][x]] = x
            inv_cols.append(ic)
        lhd_inv = [[inv_cols[y][x] for y in range(n)] for x in range(n)]
        out.append(validate_algebra(
            n, QUANDLE_SIGNATURE, {"lhd": lhd, "lhd_inv": lhd_inv}, QUANDLE_TAG))

    def dfs():
        try:
            b = cols.index(None)
        except ValueError:
            emit()
            return
        snapshot = cols.copy()
        for p in perms_fixing[b]:
            cols[b] = p
            if propagate([b]):
                dfs()
            cols[:] = snapshot

    dfs()
    return out


def _dedup_up_to_iso(algebras: Iterable[FiniteAlgebra]) -> list[FiniteAlgebra]:
    """Keep the first representative of each isomorphism class.

    Candidates are bucketed by the relabeling-invariant fingerprint, so
    full isomorphism searches only run inside a bucket.
    """
    from .algebras import _iso_invariant

    reps: list[FiniteAlgebra] = []
    buckets: dict = {}
    for a in algebras:
        key = _iso_invariant(a)
        bucket = buckets.setdefault(key, [])
        if all(find_isomorphism(a, b) is None for b in bucket):
            reps.append(a)
            bucket.append(a)
    return reps


# --- corpora -------------------------------------------------------------------

CORPUS_KINDS = ("groups", "rngs", "quandles")
_CORPUS_LIMITS = {"groups": 12, "rngs": 24, "quandles": 6}
_EXHAUSTIVE_GROUP_LIMIT = 6


@lru_cache(maxsize=None)
def corpus(kind: str, max_size: int) -> Universe:
    """Quotient-closed universe of all corpus algebras up to ``max_size``."""
    if kind not in CORPUS_KINDS:
        raise OutOfRange(f"corpus kind must be one of {CORPUS_KINDS}, got {kind!r}")
    if max_size < 1:
        raise OutOfRange("corpus max_size must be >= 1")
    if max_size > _CORPUS_LIMITS[kind]:
        raise SizeTooLarge(
            f"corpus kind {kind!r} supports max_size <= {_CORPUS_LIMITS[kind]}"
        )
    if kind == "rngs":
        members = [cyclic_rng(n) for n in range(1, max_size + 1)]
        return universe(members, quotient_closed=True)
    if kind == "groups":
        named: list[FiniteAlgebra] = [cyclic_group(n) for n in range(1, max_size + 1)]
        if max_size >= 4:
            named.append(klein_four_group())
        if max_size >= 6:
            named.append(symmetric_group(3))
        named.extend(dihedral_group(k) for k in range(3, max_size // 2 + 1))
        candidates = list(named)
        if max_size <= _EXHAUSTIVE_GROUP_LIMIT:
            for n in range(1, max_size + 1):
                candidates.extend(enumerate_groups(n))
        return universe(_dedup_up_to_iso(candidates), quotient_closed=True)
    reps = []
    for n in range(1, max_size + 1):
        reps.extend(_dedup_up_to_iso(enumerate_quandles(n)))
    reps = [canonical_algebra(q) for q in reps]
    return universe(reps, quotient_closed=True)


def corpus_manifest(kind: str, max_size: int) -> dict:
    u = corpus(kind, max_size)
    return {
        "kind": kind,
        "max_size": max_size,
        "quotient_closed": u.quotient_closed,
        "algebras": [
            {"id": f"{kind}-{i:03d}", "algebra": algebra_to_json(a)}
            for i, a in enumerate(u.algebras)
        ],
    }


# --- ideals of commutative rngs -------------------------------------------------

@dataclass(frozen=True)
class Ideal:
    """Subset containing 0, closed under +, -, and multiplication by the rng."""

    rng: FiniteAlgebra
    elements: tuple[int, ...]


def _require_rng(a: FiniteAlgebra) -> None:
    if a.tag != RNG_TAG:
        raise NotRng(f"expected a {RNG_TAG!r}-tagged algebra, got tag {a.tag!r}")


def ideal(rng: FiniteAlgebra, elements: Iterable[int]) -> Ideal:
    _require_rng(rng)
    elems = sorted(set(elements))
    if any(not 0 <= x < rng.size for x in elems):
        raise OutOfRange("ideal element outside the carrier")
    eset = set(elems)
    if rng.op("zero") not in eset:
        raise InvalidIdeal("an ideal must contain 0")
    for x in elems:
        if rng.op("neg", x) not in eset:
            raise InvalidIdeal(f"not closed under negation at {x}")
        for y in elems:
            if rng.op("add", x, y) not in eset:
                raise InvalidIdeal(f"not closed under addition at {x}+{y}")
        for r in rng.elements():
            if rng.op("mul", r, x) not in eset:
                raise InvalidIdeal(f"not closed under multiplication at {r}·{x}")
    return Ideal(rng, tuple(elems))


def ideal_of_congruence(r: Congruence) -> Ideal:
    """The block of 0; inverse to ``congruence_of_ideal``."""
    _require_rng(r.algebra)
    zero = r.algebra.op("zero")
    block = tuple(sorted(x for x in r.algebra.elements() if r.together(x, zero)))
    return Ideal(r.algebra, block)


def congruence_of_ideal(i: Ideal) -> Congruence:
    """Blocks are the additive cosets of the ideal."""
    a = i.rng
    eset = set(i.elements)
    labels = []
    for x in a.elements():
        labels.append(tuple(sorted(a.op("add", x, t) for t in eset)))
    return Congruence(a, _canonical_ids(labels))


def nilradical(a: FiniteAlgebra, i: Ideal) -> Ideal:
    """sqrt(I) = elements with some power in I; exponent capped by |A|."""
    _require_rng(a)
    eset = set(i.elements)
    out = []
    for x in a.elements():
        p = x
        for _ in range(a.size):
            if p in eset:
                out.append(x)
                break
            p = a.op("mul", p, x)
    return ideal(a, out)


def all_ideals(a: FiniteAlgebra) -> tuple[Ideal, ...]:
    return tuple(ideal_of_congruence(r) for r in con_lattice(a))


def ideal_to_json(i: Ideal) -> list[int]:
    """Ideals serialize as their sorted element list."""
    return list(i.elements)


def ideal_from_json(rng: FiniteAlgebra, doc) -> Ideal:
    if not isinstance(doc, list):
        raise InvalidIdeal("an ideal serializes as a JSON list of elements")
    return ideal(rng, doc)


def nilradical_operator(u: Universe) -> ClosureOperator:
    """Close a congruence by taking the nilradical of its ideal.

    On the bundled Z_n corpora this operator tests as minimal, because
    quotients of reduced Z_n (squarefree n) are again reduced.  That is
    a finiteness artifact: over commutative rngs at large, reduced rngs
    are not closed under quotients (Z is reduced, Z/4 is not), so the
    corresponding operator is not minimal there.
    """
    for a in u.algebras:
        _require_rng(a)

    def rule(x: FiniteAlgebra, r: Congruence) -> Congruence:
        return congruence_of_ideal(nilradical(x, ideal_of_congruence(r)))

    return make_operator(u, rule, "nilradical")


# --- quandles --------------------------------------------------------------------

def _require_quandle(a: FiniteAlgebra) -> None:
    if a.tag != QUANDLE_TAG:
        raise NotQuandle(f"expected a {QUANDLE_TAG!r}-tagged algebra, got tag {a.tag!r}")


def quandle_reachability(a: FiniteAlgebra) -> Congruence:
    """x ~ y iff y is reachable from x by <| / <|^{-1} moves; a congruence."""
    _require_quandle(a)
    pairs = []
    for x in a.elements():
        for b in a.elements():
            pairs.append((x, a.op("lhd", x, b)))
            pairs.append((x, a.op("lhd_inv", x, b)))
    parent = list(range(a.size))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for x, y in pairs:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)
    ids = _canonical_ids([find(x) for x in a.elements()])
    if not is_compatible(a, ids):
        raise CompositeNotCongruence(
            "reachability relation failed the congruence check",
            witness={"blocks": [list(b) for b in Congruence(a, ids).blocks()]},
        )
    return Congruence(a, ids)


def _composite_with_reachability(x: FiniteAlgebra, r: Congruence) -> Congruence:
    """R o ~ as a congruence; raises if the composite is not one."""
    sim = quandle_reachability(x)
    n = x.size
    related = [[False] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            related[a][b] = any(
                sim.together(a, c) and r.together(c, b) for c in range(n)
            )
    for a in range(n):
        if not related[a][a]:
            raise CompositeNotCongruence("composite is not reflexive")
        for b in range(n):
            if related[a][b] != related[b][a]:
                raise CompositeNotCongruence(
                    "composite is not symmetric", witness={"pair": [a, b]}
                )
            if related[a][b]:
                for c in range(n):
                    if related[b][c] and not related[a][c]:
                        raise CompositeNotCongruence(
                            "composite is not transitive", witness={"triple": [a, b, c]}
                        )
    ids = _canonical_ids([tuple(row) for row in related])
    if not is_compatible(x, ids):
        raise CompositeNotCongruence(
            "composite relation is not operation-compatible",
            witness={"blocks": [list(b) for b in Congruence(x, ids).blocks()]},
        )
    return Congruence(x, ids)


def quandle_closure_operator(u: Universe) -> ClosureOperator:
    for a in u.algebras:
        _require_quandle(a)
    return make_operator(u, _composite_with_reachability, "quandle")


# --- groups ------------------------------------------------------------------------

def _require_group(a: FiniteAlgebra) -> None:
    if a.tag != GROUP_TAG:
        raise NotGroup(f"expected a {GROUP_TAG!r}-tagged algebra, got tag {a.tag!r}")


@lru_cache(maxsize=None)
def commutator_congruence(a: FiniteAlgebra) -> Congruence:
    """Kernel of the abelianization quotient: collapse all commutators to e."""
    _require_group(a)
    e = a.op("e")
    pairs = []
    for x in a.elements():
        for y in a.elements():
            comm = a.op("mul", a.op("mul", x, y),
                        a.op("mul", a.op("inv", x), a.op("inv", y)))
            pairs.append((comm, e))
    return generated_congruence(a, pairs)


@lru_cache(maxsize=None)
def exponent_two_congruence(a: FiniteAlgebra) -> Congruence:
    """Collapse commutators and squares: quotient is elementary abelian 2."""
    _require_group(a)
    e = a.op("e")
    pairs = [(a.op("mul", x, x), e) for x in a.elements()]
    base = commutator_congruence(a)
    for block in base.blocks():
        pairs.extend((block[0], x) for x in block[1:])
    return generated_congruence(a, pairs)


def abelianization_operator(u: Universe) -> ClosureOperator:
    for a in u.algebras:
        _require_group(a)

    def rule(x: FiniteAlgebra, r: Congruence) -> Congruence:
        return join(r, commutator_congruence(x))

    return make_operator(u, rule, "abelianization")


def exponent_two_abelianization_operator(u: Universe) -> ClosureOperator:
    for a in u.algebras:
        _require_group(a)

    def rule(x: FiniteAlgebra, r: Congruence) -> Congruence:
        return join(r, exponent_two_congruence(x))

    return make_operator(u, rule, "exp2-abelianization")


# --- registry ----------------------------------------------------------------------

BUILTIN_OPERATOR_NAMES = (
    "identity", "top", "nilradical", "quandle", "abelianization",
    "exp2-abelianization",
)


def closure_rule(name: str):
    """Single-algebra closure rule for the named built-in operator."""
    if name == "identity":
        return lambda x, r: r
    if name == "top":
        return lambda x, r: full(x)
    if name == "nilradical":
        def _nil(x, r):
            _require_rng(x)
            return congruence_of_ideal(nilradical(x, ideal_of_congruence(r)))
        return _nil
    if name == "quandle":
        def _qnd(x, r):
            _require_quandle(x)
            return _composite_with_reachability(x, r)
        return _qnd
    if name == "abelianization":
        def _ab(x, r):
            _require_group(x)
            return join(r, commutator_congruence(x))
        return _ab
    if name == "exp2-abelianization":
        def _ab2(x, r):
            _require_group(x)
            return join(r, exponent_two_congruence(x))
        return _ab2
    raise OutOfRange(f"unknown operator {name!r}; built-ins: {BUILTIN_OPERATOR_NAMES}")


def builtin_operator(name: str, u: Universe) -> ClosureOperator:
    """The named built-in operator tabulated and validated over ``u``."""
    from .operators import identity_operator, top_operator

    if name == "identity":
        return identity_operator(u)
    if name == "top":
        return top_operator(u)
    if name == "nilradical":
        return nilradical_operator(u)
    if name == "quandle":
        return quandle_closure_operator(u)
    if name == "abelianization":
        return abelianization_operator(u)
    if name == "exp2-abelianization":
        return exponent_two_abelianization_operator(u)
    raise OutOfRange(f"unknown operator {name!r}; built-ins: {BUILTIN_OPERATOR_NAMES}")
