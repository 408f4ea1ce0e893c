"""Independent brute-force oracles the library is checked against.

Everything here is deliberately written from the definitions, not via
the library's algorithms: congruences come from scanning all partitions
of the carrier, compatibility compares all componentwise-related
argument tuples, generated congruences are meets of all containing
congruences, and homomorphisms come from scanning all maps.  Keep these
dumb and quadratic; they only ever run on small carriers.
"""

from __future__ import annotations

import itertools


def all_partitions(n: int):
    """Every partition of {0..n-1} as a restricted-growth id tuple."""
    if n == 0:
        yield ()
        return

    def grow(prefix: list[int], mx: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(mx + 2):
            yield from grow(prefix + [v], max(mx, v))

    yield from grow([0], 0)


def partition_compatible(algebra, ids) -> bool:
    """Definition-level check: related argument tuples give related values."""
    n = algebra.size
    for name, arity in algebra.sig.ops:
        if arity == 0:
            continue
        for s in itertools.product(range(n), repeat=arity):
            for t in itertools.product(range(n), repeat=arity):
                if all(ids[a] == ids[b] for a, b in zip(s, t)):
                    if ids[algebra.op(name, *s)] != ids[algebra.op(name, *t)]:
                        return False
    return True


def brute_congruences(algebra) -> list[tuple[int, ...]]:
    """All congruences by the all-partitions filter, as id tuples."""
    return [ids for ids in all_partitions(algebra.size)
            if partition_compatible(algebra, ids)]


def meet_ids(all_ids: list[tuple[int, ...]], n: int) -> tuple[int, ...]:
    """Common refinement of several partitions, canonically relabeled."""
    seen: dict = {}
    out = []
    for x in range(n):
        lab = tuple(ids[x] for ids in all_ids)
        out.append(seen.setdefault(lab, len(seen)))
    return tuple(out)


def brute_generated(algebra, pairs) -> tuple[int, ...]:
    """Meet of all congruences containing the pairs."""
    containing = [
        ids for ids in brute_congruences(algebra)
        if all(ids[a] == ids[b] for a, b in pairs)
    ]
    return meet_ids(containing, algebra.size)


def brute_homs(dom, cod) -> list[tuple[int, ...]]:
    """All operation-preserving maps by full scan; keep carriers tiny."""
    out = []
    for mapping in itertools.product(range(cod.size), repeat=dom.size):
        good = True
        for name, arity in dom.sig.ops:
            for t in itertools.product(range(dom.size), repeat=arity):
                if mapping[dom.op(name, *t)] != cod.op(name, *(mapping[x] for x in t)):
                    good = False
                    break
            if not good:
                break
        if good:
            out.append(mapping)
    return out


def ids_leq(r_ids, s_ids) -> bool:
    """Partition refinement via the definition."""
    n = len(r_ids)
    return all(
        s_ids[a] == s_ids[b]
        for a in range(n) for b in range(n)
        if r_ids[a] == r_ids[b]
    )
