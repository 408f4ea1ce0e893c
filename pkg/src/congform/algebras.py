"""Finite algebras as operation tables, and their congruence machinery.

Carriers are ``{0..n-1}``.  Tables are stored flat (row-major) so that
all values are hashable and structurally comparable; congruences are
stored as block-id arrays with ids assigned by least block element, so
two congruences are equal as values exactly when they are equal as
partitions.  That canonical encoding is what lets the rest of the
library treat fibre-isomorphism as plain equality.

Congruence generation uses union-find with a worklist: whenever two
classes merge, every operation tuple differing from a known tuple in one
coordinate by a newly merged pair is re-propagated.  Lattices are
enumerated by closing the principal congruences under binary join, and
the test suite checks both against exhaustive partition scans.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from . import terms
from .errors import (
    AxiomViolation,
    FibreMismatch,
    NotACongruence,
    NotAHomomorphism,
    OutOfRange,
    SignatureMismatch,
    SizeTooLarge,
    TableShape,
    UnknownOp,
    UnknownTag,
)

GROUP_TAG = "group"
RNG_TAG = "commutative-rng"
QUANDLE_TAG = "quandle"


@dataclass(frozen=True)
class Signature:
    """Operation names with arities; names unique, arities >= 0."""

    ops: tuple[tuple[str, int], ...]

    def __post_init__(self):
        names = [name for name, _ in self.ops]
        if len(set(names)) != len(names):
            raise ValueError("duplicate operation names in signature")
        if any(arity < 0 for _, arity in self.ops):
            raise ValueError("negative arity")

    def arity(self, name: str) -> int:
        for n, a in self.ops:
            if n == name:
                return a
        raise UnknownOp(f"operation {name!r} not in signature")

    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.ops)

    def __repr__(self):
        return "Signature(" + ", ".join(f"{n}/{a}" for n, a in self.ops) + ")"


GROUP_SIGNATURE = Signature((("mul", 2), ("inv", 1), ("e", 0)))
COMMUTATIVE_RNG_SIGNATURE = Signature((("add", 2), ("neg", 1), ("zero", 0), ("mul", 2)))
QUANDLE_SIGNATURE = Signature((("lhd", 2), ("lhd_inv", 2)))

# tag -> (signature op set, defining equations)
VARIETIES = {
    GROUP_TAG: (GROUP_SIGNATURE, terms.GROUP_AXIOMS),
    RNG_TAG: (COMMUTATIVE_RNG_SIGNATURE, terms.COMMUTATIVE_RNG_AXIOMS),
    QUANDLE_TAG: (QUANDLE_SIGNATURE, terms.QUANDLE_AXIOMS),
}


@dataclass(frozen=True, repr=False)
class FiniteAlgebra:
    """Carrier {0..size-1} plus one flat table per signature operation."""

    size: int
    sig: Signature
    tables: tuple[tuple[int, ...], ...]
    tag: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(
            self, "_hash", hash((self.size, self.sig.ops, self.tables, self.tag))
        )
        object.__setattr__(
            self, "_op_index", {name: i for i, (name, _) in enumerate(self.sig.ops)}
        )

    def __hash__(self):
        return self._hash

    def op(self, name: str, *args: int) -> int:
        i = self._op_index.get(name)
        if i is None:
            raise UnknownOp(f"operation {name!r} not in signature")
        idx = 0
        for a in args:
            idx = idx * self.size + a
        return self.tables[i][idx]

    def elements(self) -> range:
        return range(self.size)

    def table_nested(self, name: str):
        """Table of ``name`` as nested lists (an int for arity 0)."""
        i = self._op_index[name]
        arity = self.sig.ops[i][1]
        return _unflatten(self.tables[i], self.size, arity)

    def __repr__(self):
        tag = f", tag={self.tag!r}" if self.tag else ""
        return f"FiniteAlgebra(size={self.size}, {self.sig!r}{tag})"


def _flatten(nested, n: int, arity: int, opname: str) -> tuple[int, ...]:
    if arity == 0:
        if not isinstance(nested, int) or isinstance(nested, bool):
            raise TableShape(f"table for {opname!r} must be a single integer")
        return (nested,)
    if not isinstance(nested, (list, tuple)) or len(nested) != n:
        raise TableShape(
            f"table for {opname!r} must be a list of length {n} at arity {arity}"
        )
    out: list[int] = []
    for row in nested:
        if arity == 1:
            if not isinstance(row, int) or isinstance(row, bool):
                raise TableShape(f"table for {opname!r} has a non-integer entry")
            out.append(row)
        else:
            out.extend(_flatten(row, n, arity - 1, opname))
    return tuple(out)


def _unflatten(flat: Sequence[int], n: int, arity: int):
    if arity == 0:
        return flat[0]
    if arity == 1:
        return list(flat)
    step = n ** (arity - 1)
    return [_unflatten(flat[i * step:(i + 1) * step], n, arity - 1) for i in range(n)]


def validate_algebra(size, signature, tables, tag=None) -> FiniteAlgebra:
    """Check shapes, entry ranges, and (for tagged algebras) variety axioms.

    ``signature`` may be a Signature or a list of (name, arity) pairs /
    {"name":..,"arity":..} objects; ``tables`` maps names to nested lists.
    """
    if not isinstance(size, int) or isinstance(size, bool) or size < 1:
        raise TableShape(f"size must be a positive integer, got {size!r}")
    if not isinstance(signature, Signature):
        ops = []
        for item in signature:
            if isinstance(item, dict):
                ops.append((str(item["name"]), int(item["arity"])))
            else:
                name, arity = item
                ops.append((str(name), int(arity)))
        signature = Signature(tuple(ops))
    known = set(signature.names())
    extra = set(tables) - known
    if extra:
        raise TableShape(f"tables given for unknown operations: {sorted(extra)}")
    flat = []
    for name, arity in signature.ops:
        if name not in tables:
            raise TableShape(f"missing table for operation {name!r}")
        flat.append(_flatten(tables[name], size, arity, name))
    for (name, _), table in zip(signature.ops, flat):
        for v in table:
            if not 0 <= v < size:
                raise OutOfRange(f"entry {v} in table {name!r} outside [0, {size})")
    if tag is not None:
        if tag not in VARIETIES:
            raise UnknownTag(f"unknown tag {tag!r}")
        want_sig, axioms = VARIETIES[tag]
        if set(signature.ops) != set(want_sig.ops):
            raise TableShape(
                f"tag {tag!r} requires signature {sorted(want_sig.ops)}, "
                f"got {sorted(signature.ops)}"
            )
        algebra = FiniteAlgebra(size, signature, tuple(flat), tag)
        check = terms.satisfies_equations(algebra, axioms)
        if not check:
            raise AxiomViolation(
                f"tagged variety {tag!r} fails axiom "
                f"'{check.witness['equation']}' at assignment "
                f"{tuple(check.witness['assignment'])}",
                witness=check.witness,
            )
        return algebra
    return FiniteAlgebra(size, signature, tuple(flat), None)


def algebra_from_json(doc: dict) -> FiniteAlgebra:
    for key in ("size", "signature", "tables"):
        if key not in doc:
            raise TableShape(f"algebra object missing {key!r}")
    return validate_algebra(doc["size"], doc["signature"], doc["tables"], doc.get("tag"))


def algebra_to_json(a: FiniteAlgebra) -> dict:
    return {
        "size": a.size,
        "signature": [{"name": n, "arity": k} for n, k in a.sig.ops],
        "tables": {n: a.table_nested(n) for n, _ in a.sig.ops},
        "tag": a.tag,
    }


# --- congruences -------------------------------------------------------------

def _canonical_ids(labels: Sequence) -> tuple[int, ...]:
    """Relabel a partition-as-labels array so block ids go by least element."""
    seen: dict = {}
    out = []
    for lab in labels:
        if lab not in seen:
            seen[lab] = len(seen)
        out.append(seen[lab])
    return tuple(out)


@dataclass(frozen=True, repr=False)
class Congruence:
    """Compatible partition, encoded as a canonical block-id array."""

    algebra: FiniteAlgebra
    ids: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((self.algebra._hash, self.ids)))

    def __hash__(self):
        return self._hash

    def together(self, a: int, b: int) -> bool:
        return self.ids[a] == self.ids[b]

    @property
    def n_blocks(self) -> int:
        return max(self.ids) + 1 if self.ids else 0

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n_blocks)]
        for x, b in enumerate(self.ids):
            out[b].append(x)
        return tuple(tuple(b) for b in out)

    def __repr__(self):
        return "Congruence" + repr([list(b) for b in self.blocks()])


def diagonal(a: FiniteAlgebra) -> Congruence:
    return Congruence(a, tuple(range(a.size)))


def full(a: FiniteAlgebra) -> Congruence:
    return Congruence(a, (0,) * a.size)


def is_compatible(a: FiniteAlgebra, ids: Sequence[int]) -> bool:
    """Does the partition respect every operation, one coordinate at a time?"""
    n = a.size
    for (name, arity), table in zip(a.sig.ops, a.tables):
        if arity == 0:
            continue
        for t in itertools.product(range(n), repeat=arity):
            idx = 0
            for c in t:
                idx = idx * n + c
            v = table[idx]
            for pos in range(arity):
                stride = n ** (arity - 1 - pos)
                base = idx - t[pos] * stride
                for u in range(n):
                    if ids[u] == ids[t[pos]] and ids[table[base + u * stride]] != ids[v]:
                        return False
    return True


def congruence_from_blocks(a: FiniteAlgebra, blocks: Iterable[Iterable[int]],
                           *, allow_partial: bool = True) -> Congruence:
    """Build a congruence from blocks; unlisted elements become singletons.

    Raises NotACongruence when the blocks overlap, mention out-of-range
    elements, or the partition is not operation-compatible.
    """
    labels: list = [None] * a.size
    for i, block in enumerate(blocks):
        for x in block:
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < a.size:
                raise OutOfRange(f"block element {x!r} outside [0, {a.size})")
            if labels[x] is not None:
                raise NotACongruence(f"element {x} appears in two blocks")
            labels[x] = i
    missing = [x for x in range(a.size) if labels[x] is None]
    if missing and not allow_partial:
        raise NotACongruence(f"elements {missing} not covered by any block")
    for x in missing:
        labels[x] = ("singleton", x)
    ids = _canonical_ids(labels)
    if not is_compatible(a, ids):
        raise NotACongruence(
            "partition is not compatible with the operations",
            witness={"blocks": [list(b) for b in Congruence(a, ids).blocks()]},
        )
    return Congruence(a, ids)


def congruence_to_blocks(r: Congruence) -> list[list[int]]:
    return [list(b) for b in r.blocks()]


# --- homomorphisms -----------------------------------------------------------

@dataclass(frozen=True, repr=False)
class Homomorphism:
    """Operation-preserving total map; ``surjective`` is cached at creation."""

    dom: FiniteAlgebra
    cod: FiniteAlgebra
    map: tuple[int, ...]
    surjective: bool

    def __post_init__(self):
        object.__setattr__(
            self, "_hash", hash((self.dom._hash, self.cod._hash, self.map))
        )

    def __hash__(self):
        return self._hash

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __repr__(self):
        return f"Homomorphism({self.dom.size}->{self.cod.size}, {list(self.map)})"


def _preserves_ops(dom: FiniteAlgebra, cod: FiniteAlgebra, mapping: Sequence[int]):
    """Return a violating (op, args) pair, or None."""
    for name, arity in dom.sig.ops:
        for t in itertools.product(range(dom.size), repeat=arity):
            if mapping[dom.op(name, *t)] != cod.op(name, *(mapping[x] for x in t)):
                return name, t
    return None


def homomorphism(dom: FiniteAlgebra, cod: FiniteAlgebra,
                 mapping: Sequence[int]) -> Homomorphism:
    if dom.sig != cod.sig:
        raise SignatureMismatch("domain and codomain have different signatures")
    mapping = tuple(mapping)
    if len(mapping) != dom.size:
        raise NotAHomomorphism(f"map must list {dom.size} values")
    if any(not 0 <= v < cod.size for v in mapping):
        raise OutOfRange("map value outside codomain carrier")
    bad = _preserves_ops(dom, cod, mapping)
    if bad is not None:
        raise NotAHomomorphism(
            f"map does not preserve {bad[0]!r} at arguments {bad[1]}",
            witness={"op": bad[0], "args": list(bad[1])},
        )
    return Homomorphism(dom, cod, mapping, len(set(mapping)) == cod.size)


def identity_hom(a: FiniteAlgebra) -> Homomorphism:
    return Homomorphism(a, a, tuple(range(a.size)), True)


def compose(g: Homomorphism, f: Homomorphism) -> Homomorphism:
    """g after f."""
    if f.cod != g.dom:
        raise SignatureMismatch("middle objects of composition differ")
    m = tuple(g.map[f.map[x]] for x in range(f.dom.size))
    return Homomorphism(f.dom, g.cod, m, len(set(m)) == g.cod.size)


def kernel_congruence(f: Homomorphism) -> Congruence:
    return Congruence(f.dom, _canonical_ids(f.map))


def quotient(x: FiniteAlgebra, r: Congruence) -> tuple[FiniteAlgebra, Homomorphism]:
    """Quotient algebra on canonical block ids plus the projection."""
    if r.algebra != x:
        raise FibreMismatch("congruence lives on a different algebra")
    k = r.n_blocks
    reps = [0] * k
    for e in range(x.size - 1, -1, -1):
        reps[r.ids[e]] = e
    tables = []
    for name, arity in x.sig.ops:
        flat = []
        for t in itertools.product(range(k), repeat=arity):
            flat.append(r.ids[x.op(name, *(reps[b] for b in t))])
        tables.append(tuple(flat))
    q = FiniteAlgebra(k, x.sig, tuple(tables), x.tag)
    return q, Homomorphism(x, q, r.ids, True)


# --- hom enumeration ---------------------------------------------------------

def _hom_search(dom: FiniteAlgebra, cod: FiniteAlgebra, *, bijective: bool,
                first_only: bool) -> list[tuple[int, ...]]:
    """DFS over partial maps with forced-value propagation.

    Whenever all arguments of an operation tuple are assigned, the image
    of its value is forced; contradictions prune the branch.  Maps are
    produced in lexicographic order.
    """
    n, m = dom.size, cod.size
    if bijective and n != m:
        return []
    ops = [(name, arity) for name, arity in dom.sig.ops]
    results: list[tuple[int, ...]] = []

    def propagate(assign: list[Optional[int]], queue: deque) -> bool:
        while queue:
            x = queue.popleft()
            for name, arity in ops:
                if arity == 0:
                    continue
                for t in itertools.product(range(n), repeat=arity):
                    if x not in t:
                        continue
                    imgs = []
                    ok = True
                    for c in t:
                        v = assign[c]
                        if v is None:
                            ok = False
                            break
                        imgs.append(v)
                    if not ok:
                        continue
                    val = dom.op(name, *t)
                    want = cod.op(name, *imgs)
                    have = assign[val]
                    if have is None:
                        if bijective and want in _used(assign, val):
                            return False
                        assign[val] = want
                        queue.append(val)
                    elif have != want:
                        return False
        return True

    def _used(assign, skip):
        return {v for i, v in enumerate(assign) if v is not None and i != skip}

    # constants force their images before any choice is made
    seed: list[Optional[int]] = [None] * n
    seed_queue: deque = deque()
    for name, arity in ops:
        if arity == 0:
            x, want = dom.op(name), cod.op(name)
            if seed[x] is None:
                seed[x] = want
                seed_queue.append(x)
            elif seed[x] != want:
                return []
    if bijective and len({v for v in seed if v is not None}) != sum(
            1 for v in seed if v is not None):
        return []
    if not propagate(seed, seed_queue):
        return []

    def dfs(assign: list[Optional[int]]):
        if first_only and results:
            return
        try:
            x = assign.index(None)
        except ValueError:
            results.append(tuple(assign))
            return
        used = {v for v in assign if v is not None} if bijective else ()
        for v in range(m):
            if bijective and v in used:
                continue
            branch = assign.copy()
            branch[x] = v
            if propagate(branch, deque([x])):
                dfs(branch)
                if first_only and results:
                    return

    dfs(seed)
    return results


@lru_cache(maxsize=None)
def enumerate_homs(x: FiniteAlgebra, y: FiniteAlgebra) -> tuple[Homomorphism, ...]:
    """All homomorphisms x -> y in lexicographic map order."""
    if x.sig != y.sig:
        raise SignatureMismatch("hom enumeration needs a shared signature")
    maps = _hom_search(x, y, bijective=False, first_only=False)
    return tuple(
        Homomorphism(x, y, m, len(set(m)) == y.size) for m in maps
    )


def enumerate_surjections(x: FiniteAlgebra, y: FiniteAlgebra) -> tuple[Homomorphism, ...]:
    if x.size < y.size:
        if x.sig != y.sig:
            raise SignatureMismatch("hom enumeration needs a shared signature")
        return ()
    return tuple(f for f in enumerate_homs(x, y) if f.surjective)


@lru_cache(maxsize=None)
def find_isomorphism(x: FiniteAlgebra, y: FiniteAlgebra) -> Optional[Homomorphism]:
    """Lexicographically least isomorphism x -> y, or None."""
    if x.sig != y.sig or x.size != y.size or x.tag != y.tag:
        return None
    if _iso_invariant(x) != _iso_invariant(y):
        return None
    maps = _hom_search(x, y, bijective=True, first_only=True)
    return Homomorphism(x, y, maps[0], True) if maps else None


def _cycle_type(perm: Sequence[int]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


def _line_profile(line: Sequence[int], n: int):
    """Count multiset of a row/column, or its cycle type when it permutes."""
    counts = Counter(line)
    if len(counts) == n:
        return ("perm", _cycle_type(line))
    return ("counts", tuple(sorted(counts.values())))


@lru_cache(maxsize=None)
def _iso_invariant(a: FiniteAlgebra):
    """Relabeling-invariant fingerprint used to cut isomorphism searches.

    Per operation: the global value-count multiset, plus (for binary
    tables) sorted multisets of row and column profiles, where a profile
    is the cycle type if the line is a permutation and the count multiset
    otherwise.  Cycle types are what separates tables whose rows and
    columns all permute the carrier, quandles in particular.
    """
    n = a.size
    parts: list = [a.size, a.tag or ""]
    for (name, arity), table in zip(a.sig.ops, a.tables):
        counts = Counter(table)
        parts.append((name, tuple(sorted(counts.values()))))
        if arity == 1:
            parts.append(_line_profile(table, n))
        elif arity == 2:
            diag = sum(1 for v in range(n) if table[v * n + v] == v)
            rows = sorted(_line_profile(table[v * n:(v + 1) * n], n) for v in range(n))
            cols = sorted(_line_profile(table[v::n], n) for v in range(n))
            parts.append((diag, tuple(rows), tuple(cols)))
    return tuple(parts)


def relabel_algebra(a: FiniteAlgebra, perm: Sequence[int]) -> FiniteAlgebra:
    """Transport tables along the bijection old->new given by ``perm``."""
    n = a.size
    tables = []
    for name, arity in a.sig.ops:
        flat = [0] * (n ** arity)
        for t in itertools.product(range(n), repeat=arity):
            idx = 0
            for c in t:
                idx = idx * n + perm[c]
            flat[idx] = perm[a.op(name, *t)]
        tables.append(tuple(flat))
    return FiniteAlgebra(n, a.sig, tuple(tables), a.tag)


def canonical_algebra(a: FiniteAlgebra, *, max_size: int = 7) -> FiniteAlgebra:
    """Lexicographically least relabeling; brute force over permutations."""
    if a.size > max_size:
        raise SizeTooLarge(f"canonical form by permutation scan needs size <= {max_size}")
    best = None
    for perm in itertools.permutations(range(a.size)):
        cand = relabel_algebra(a, perm)
        if best is None or cand.tables < best.tables:
            best = cand
    return best


# --- congruence generation and lattices --------------------------------------

def generated_congruence(x: FiniteAlgebra, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Least congruence containing the given pairs (Mal'cev propagation).

    Union-find with a worklist: when the classes of p and q merge, every
    operation tuple differing in one coordinate by (p, q) forces its two
    values together.  Unary and binary operations, the common case, walk
    flat table rows and strided columns directly.
    """
    n = x.size
    parent = list(range(n))
    weight = [1] * n
    members: list[list[int]] = [[i] for i in range(n)]

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    pending: deque[tuple[int, int]] = deque()
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise OutOfRange(f"pair ({a}, {b}) outside [0, {n})")
        pending.append((a, b))

    unary = [t for (_, k), t in zip(x.sig.ops, x.tables) if k == 1]
    binary = [t for (_, k), t in zip(x.sig.ops, x.tables) if k == 2]
    wide = [(k, t) for (_, k), t in zip(x.sig.ops, x.tables) if k > 2]

    def force(u: int, v: int) -> None:
        if find(u) != find(v):
            pending.append((u, v))

    # Invariant: every member of a class has been propagated against its
    # root, so chaining through roots reaches every intra-class pair.
    # Union by size keeps the total number of moved elements near-linear.
    while pending:
        a, b = pending.popleft()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        if weight[ra] < weight[rb]:
            ra, rb = rb, ra
        moved = members[rb]
        parent[rb] = ra
        weight[ra] += weight[rb]
        members[ra].extend(moved)
        members[rb] = []
        p = ra
        for q in moved:
            for t in unary:
                force(t[p], t[q])
            for t in binary:
                for u, v in zip(t[p * n:(p + 1) * n], t[q * n:(q + 1) * n]):
                    if find(u) != find(v):
                        pending.append((u, v))
                for u, v in zip(t[p::n], t[q::n]):
                    if find(u) != find(v):
                        pending.append((u, v))
            for k, t in wide:
                for pos in range(k):
                    hi = n ** (k - 1 - pos)
                    for lo in range(n ** pos):
                        base = lo * hi * n
                        for rest in range(hi):
                            force(t[base + p * hi + rest], t[base + q * hi + rest])
    return Congruence(x, _canonical_ids([find(i) for i in range(n)]))


def meet(r: Congruence, s: Congruence) -> Congruence:
    if r.algebra != s.algebra:
        raise FibreMismatch("meet needs congruences on the same algebra")
    return Congruence(r.algebra, _canonical_ids(list(zip(r.ids, s.ids))))


def join(r: Congruence, s: Congruence) -> Congruence:
    if r.algebra != s.algebra:
        raise FibreMismatch("join needs congruences on the same algebra")
    pairs = []
    for c in (r, s):
        for block in c.blocks():
            pairs.extend((block[0], x) for x in block[1:])
    return generated_congruence(r.algebra, pairs)


@dataclass(frozen=True, repr=False)
class CongruenceLattice:
    """All congruences of one algebra, lexicographically ordered by ids."""

    algebra: FiniteAlgebra
    elements: tuple[Congruence, ...]

    @property
    def bottom(self) -> Congruence:
        return diagonal(self.algebra)

    @property
    def top(self) -> Congruence:
        return full(self.algebra)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"CongruenceLattice({self.algebra!r}, {len(self.elements)} congruences)"


@lru_cache(maxsize=None)
def con_lattice(x: FiniteAlgebra) -> CongruenceLattice:
    """Principal congruences closed under binary join (plus the diagonal)."""
    found = {diagonal(x)}
    for a in range(x.size):
        for b in range(a + 1, x.size):
            found.add(generated_congruence(x, [(a, b)]))
    frontier = list(found)
    while frontier:
        fresh = []
        for r in frontier:
            for s in list(found):
                j = join(r, s)
                if j not in found:
                    found.add(j)
                    fresh.append(j)
        frontier = fresh
    return CongruenceLattice(x, tuple(sorted(found, key=lambda c: c.ids)))
