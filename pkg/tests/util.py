"""Independent oracles and generators used across the test suite.

Everything here deliberately avoids the library's own search and solver
paths: pattern scans enumerate subsets directly, the relation counter
enumerates raw relations, and the representable-poset generator builds the
order from actual random intervals.
"""

from __future__ import annotations

import itertools

import numpy as np

from intervalcert import Poset


def brute_force_strict_order_count(n: int) -> int:
    """Count transitive irreflexive relations on n labeled points, by definition.

    Enumerates all 2^(n(n-1)) off-diagonal bit patterns in numpy chunks and
    keeps those whose two-step composition stays inside the relation.
    """
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    total = 1 << len(cells)
    count = 0
    chunk = 1 << 14
    for start in range(0, total, chunk):
        masks = np.arange(start, min(start + chunk, total), dtype=np.int64)
        rel = np.zeros((len(masks), n, n), dtype=np.uint8)
        for b, (i, j) in enumerate(cells):
            rel[:, i, j] = (masks >> b) & 1
        two_step = (rel @ rel) > 0
        ok = ~(two_step & ~rel.astype(bool)).any(axis=(1, 2))
        count += int(ok.sum())
    return count


def contains_two_plus_two(poset: Poset) -> bool:
    """Subset scan: some 4 elements induce exactly two disjoint comparable pairs."""
    lt = poset.lt
    n = len(poset)
    for quad in itertools.combinations(range(n), 4):
        comparable = [
            (u, v)
            for u, v in itertools.combinations(quad, 2)
            if lt[u, v] or lt[v, u]
        ]
        if len(comparable) == 2 and not set(comparable[0]) & set(comparable[1]):
            return True
    return False


def contains_chain_plus_one(poset: Poset, chain_len: int) -> bool:
    """Subset scan: a totally ordered set of `chain_len` plus one element incomparable to it."""
    lt = poset.lt
    n = len(poset)
    for subset in itertools.combinations(range(n), chain_len + 1):
        for lone in subset:
            rest = [v for v in subset if v != lone]
            if any(lt[lone, v] or lt[v, lone] for v in rest):
                continue
            if all(lt[u, v] or lt[v, u] for u, v in itertools.combinations(rest, 2)):
                return True
    return False


def representable_by_direct_scan(poset: Poset, k: int) -> bool:
    """The forbidden-pattern criterion, evaluated by raw subset scans."""
    return not contains_two_plus_two(poset) and not contains_chain_plus_one(poset, k + 2)


def random_interval_poset(n: int, k: int, seed: int) -> Poset:
    """A poset that has a [1, k] representation by construction.

    Samples integer half-unit endpoints with lengths in [1, k] and reads
    the order off the intervals, so the result is representable no matter
    what the solver thinks.
    """
    rng = np.random.default_rng(seed)
    lefts = rng.integers(0, 4 * n + 1, size=n)
    lengths = rng.integers(2, 2 * k + 1, size=n)  # half-units: [1, k]
    rights = lefts + lengths
    lt = rights[:, None] < lefts[None, :]
    return Poset(tuple(f"v{i}" for i in range(n)), lt)
