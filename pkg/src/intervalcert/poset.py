"""Finite strict partial orders and their forbidden-pattern machinery.

A poset is stored densely: a tuple of element identifiers plus a boolean
matrix ``lt`` where ``lt[i, j]`` means ``elements[i]`` is strictly below
``elements[j]``. The matrix is always irreflexive and transitive (hence
antisymmetric); constructors enforce this.

Besides the data type, this module hosts the two forbidden patterns that
obstruct bounded-length interval representations -- the disjoint pair of
2-chains (:class:`TwoPlusTwo`) and a (k+2)-chain plus one incomparable
element (:class:`ChainPlusOne`) -- together with a direct exhaustive
search for them (:func:`search_forbidden`) that is independent of the
digraph pipeline, an exhaustive enumerator of small labeled posets, and a
seeded random generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

import numpy as np

from .errors import (
    CycleInRelationError,
    DuplicateElementError,
    InvalidKError,
    InvalidSizeError,
    NotCoverRelationError,
    SizeTooLargeError,
    UnknownElementError,
)

# Chain labels for small generated posets; "x" is reserved for the lone element.
_CHAIN_LABELS = "abcdefghijklmnopqrstuvw"


def _compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Boolean relation composition: (a ; b)[i, j] = exists m: a[i,m] and b[m,j]."""
    return (a.astype(np.uint8) @ b.astype(np.uint8)) > 0


def _transitive_closure(rel: np.ndarray) -> np.ndarray:
    reach = rel.copy()
    while True:
        nxt = reach | _compose(reach, reach)
        if np.array_equal(nxt, reach):
            return reach
        reach = nxt


@dataclass(frozen=True, eq=False)
class Poset:
    """A finite set with an irreflexive, transitive strict order.

    ``elements`` fixes the identifier order; ``lt`` is indexed by position
    in that tuple. Instances are immutable and safe to share.
    """

    elements: tuple[str, ...]
    lt: np.ndarray

    def __post_init__(self) -> None:
        elements = tuple(self.elements)
        if len(set(elements)) != len(elements):
            raise DuplicateElementError("duplicate element identifier")
        lt = np.asarray(self.lt, dtype=bool)
        n = len(elements)
        if lt.shape != (n, n):
            raise ValueError(f"relation matrix must be {n}x{n}, got {lt.shape}")
        if lt.diagonal().any():
            raise ValueError("relation is not irreflexive")
        if (_compose(lt, lt) & ~lt).any():
            raise ValueError("relation is not transitive")
        if (lt & lt.T).any():
            raise ValueError("relation is not antisymmetric")
        lt = lt.copy()
        lt.setflags(write=False)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "lt", lt)
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(elements)})

    @classmethod
    def from_relations(
        cls,
        elements: Iterable[str],
        pairs: Iterable[tuple[str, str]],
        mode: str = "raw",
    ) -> "Poset":
        """Build a poset from strict-order pairs.

        ``raw`` closes the pairs transitively; ``covers`` additionally
        requires the input to be exactly the cover relation of the result.
        Rejects input whose closure would relate an element to itself.
        """
        if mode not in ("raw", "covers"):
            raise ValueError(f"mode must be 'raw' or 'covers', got {mode!r}")
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            raise DuplicateElementError("duplicate element identifier")
        index = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        rel = np.zeros((n, n), dtype=bool)
        seen_pairs = []
        for a, b in pairs:
            for e in (a, b):
                if e not in index:
                    raise UnknownElementError(f"unknown element {e!r}")
            rel[index[a], index[b]] = True
            seen_pairs.append((a, b))
        closure = _transitive_closure(rel)
        if closure.diagonal().any():
            bad = elements[int(closure.diagonal().argmax())]
            raise CycleInRelationError(
                f"input pairs are cyclic around {bad!r}; not a partial order"
            )
        if mode == "covers":
            covers = closure & ~_compose(closure, closure)
            for a, b in seen_pairs:
                if not covers[index[a], index[b]]:
                    raise NotCoverRelationError(
                        f"pair ({a!r}, {b!r}) is implied by the other pairs"
                    )
        return cls(elements, closure)

    # -- queries ---------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElementError(f"unknown element {x!r}") from None

    def __contains__(self, x: str) -> bool:
        return x in self._index

    def less(self, x: str, y: str) -> bool:
        """True iff x is strictly below y."""
        return bool(self.lt[self.index(x), self.index(y)])

    def incomparable(self, x: str, y: str) -> bool:
        """True iff x != y and neither is below the other."""
        i, j = self.index(x), self.index(y)
        return i != j and not self.lt[i, j] and not self.lt[j, i]

    def relation_pairs(self) -> list[tuple[str, str]]:
        """All ordered pairs (x, y) with x strictly below y, row-major."""
        ii, jj = np.nonzero(self.lt)
        return [(self.elements[i], self.elements[j]) for i, j in zip(ii, jj)]

    def cover_pairs(self) -> list[tuple[str, str]]:
        """The cover relation: x below y with nothing strictly in between."""
        covers = self.lt & ~_compose(self.lt, self.lt)
        ii, jj = np.nonzero(covers)
        return [(self.elements[i], self.elements[j]) for i, j in zip(ii, jj)]

    def induced(self, subset: Iterable[str]) -> "Poset":
        """Restriction to ``subset``, keeping the given order of identifiers."""
        subset = tuple(subset)
        if len(set(subset)) != len(subset):
            raise DuplicateElementError("duplicate element in subset")
        idx = np.array([self.index(x) for x in subset], dtype=int)
        if idx.size == 0:
            return Poset((), np.zeros((0, 0), dtype=bool))
        return Poset(subset, self.lt[np.ix_(idx, idx)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self.lt, other.lt)

    def __hash__(self) -> int:
        return hash((self.elements, self.lt.tobytes()))

    def __repr__(self) -> str:
        return f"Poset({len(self)} elements, {int(self.lt.sum())} relations)"


def chain_plus_one(n: int) -> Poset:
    """The poset of an n-chain plus one element incomparable to all of it.

    Chain elements are labeled bottom-to-top starting at ``a``; the lone
    element is ``x``.
    """
    if n < 1:
        raise InvalidSizeError(f"chain length must be >= 1, got {n}")
    if n <= len(_CHAIN_LABELS):
        chain = list(_CHAIN_LABELS[:n])
    else:
        chain = [f"a{i}" for i in range(1, n + 1)]
    elements = tuple(chain) + ("x",)
    lt = np.zeros((n + 1, n + 1), dtype=bool)
    for i in range(n):
        lt[i, i + 1 : n] = True
    return Poset(elements, lt)


# -- forbidden patterns --------------------------------------------------


@dataclass(frozen=True)
class TwoPlusTwo:
    """Two disjoint 2-chains, incomparable across: ((a, x), (b, y)) with a < x, b < y."""

    chains: tuple[tuple[str, str], tuple[str, str]]

    kind = "two-plus-two"

    @property
    def witness_elements(self) -> tuple[str, ...]:
        (a, x), (b, y) = self.chains
        return (a, x, b, y)


@dataclass(frozen=True)
class ChainPlusOne:
    """A chain (listed bottom-to-top) plus one element incomparable to all of it."""

    chain: tuple[str, ...]
    lone: str

    kind = "chain-plus-one"

    @property
    def witness_elements(self) -> tuple[str, ...]:
        return self.chain + (self.lone,)


ForbiddenSubposet = Union[TwoPlusTwo, ChainPlusOne]


def verify_forbidden(poset: Poset, forbidden: ForbiddenSubposet, k: int) -> bool:
    """Check that ``forbidden`` really is the claimed induced pattern in ``poset``.

    For :class:`ChainPlusOne` the chain must have exactly ``k + 2``
    elements. Unknown elements raise; a wrong pattern just returns False.
    """
    names = forbidden.witness_elements
    for e in names:
        poset.index(e)
    if len(set(names)) != len(names):
        return False
    if isinstance(forbidden, TwoPlusTwo):
        (a, x), (b, y) = forbidden.chains
        return (
            poset.less(a, x)
            and poset.less(b, y)
            and poset.incomparable(a, b)
            and poset.incomparable(a, y)
            and poset.incomparable(x, b)
            and poset.incomparable(x, y)
        )
    if len(forbidden.chain) != k + 2:
        return False
    chain = forbidden.chain
    for i in range(len(chain)):
        for j in range(i + 1, len(chain)):
            if not poset.less(chain[i], chain[j]):
                return False
    return all(poset.incomparable(forbidden.lone, c) for c in chain)


def search_forbidden(poset: Poset, k: int) -> ForbiddenSubposet | None:
    """Directly search for an induced 2+2 or (k+2)-chain-plus-one.

    Scans ordered pairs of comparable pairs for a 2+2 first; otherwise runs
    a longest-chain DP among the elements incomparable to each candidate
    lone element. Deterministic: first witness in element order wins, and a
    longer chain is trimmed to its top ``k + 2`` elements. Entirely
    independent of the digraph machinery, so it can serve as an oracle for
    it.
    """
    if k < 1:
        raise InvalidKError(f"k must be >= 1, got {k}")
    lt = poset.lt
    n = len(poset)

    comparable = [(i, j) for i in range(n) for j in range(n) if lt[i, j]]
    for ai, xi in comparable:
        for bi, yi in comparable:
            if len({ai, xi, bi, yi}) != 4:
                continue
            if lt[ai, bi] or lt[bi, ai] or lt[ai, yi] or lt[yi, ai]:
                continue
            if lt[xi, bi] or lt[bi, xi] or lt[xi, yi] or lt[yi, xi]:
                continue
            e = poset.elements
            return TwoPlusTwo(((e[ai], e[xi]), (e[bi], e[yi])))

    for lone_i in range(n):
        others = [j for j in range(n) if j != lone_i and not lt[lone_i, j] and not lt[j, lone_i]]
        if len(others) < k + 2:
            continue
        chain = _longest_chain(lt, others)
        if len(chain) >= k + 2:
            top = chain[-(k + 2) :]
            e = poset.elements
            return ChainPlusOne(tuple(e[i] for i in top), e[lone_i])
    return None


def _longest_chain(lt: np.ndarray, nodes: list[int]) -> list[int]:
    """Longest chain (as indices, bottom-to-top) within ``nodes``.

    DP over a linear extension; tie-breaks are fixed so the result is
    deterministic.
    """
    node_set = set(nodes)
    # Sorting by predecessor count inside the subset is a linear extension.
    order = sorted(nodes, key=lambda v: (sum(1 for u in nodes if lt[u, v]), v))
    best_len: dict[int, int] = {}
    best_pred: dict[int, int | None] = {}
    for v in order:
        length, pred = 1, None
        for u in order:
            if u in node_set and lt[u, v] and best_len.get(u, 0) + 1 > length:
                length, pred = best_len[u] + 1, u
        best_len[v] = length
        best_pred[v] = pred
    top = max(sorted(best_len), key=lambda v: best_len[v])
    chain: list[int] = []
    cur: int | None = top
    while cur is not None:
        chain.append(cur)
        cur = best_pred[cur]
    chain.reverse()
    return chain


# -- generators ----------------------------------------------------------


def enumerate_posets(n: int) -> Iterator[Poset]:
    """Yield every labeled poset on n elements (labels a, b, ...) exactly once.

    Works by extending each poset on m elements with a new top-indexed
    element and every consistent (down-set, up-set) pair, which produces
    each labeled poset once. Supported for n up to 6.
    """
    if n < 1:
        raise InvalidSizeError(f"n must be >= 1, got {n}")
    if n > 6:
        raise SizeTooLargeError(f"exhaustive enumeration supported up to n = 6, got {n}")
    labels = tuple(_CHAIN_LABELS[:n])

    def extend(ups: tuple[int, ...], downs: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        m = len(ups)
        if m == n:
            yield ups, downs
            return
        for below in range(1 << m):
            ok = True
            allowed = (1 << m) - 1
            t = below
            while t:
                d = (t & -t).bit_length() - 1
                if downs[d] & ~below:  # below-set must be down-closed
                    ok = False
                    break
                allowed &= ups[d]  # everything above the new element must already be above d
                t &= t - 1
            if not ok:
                continue
            allowed &= ~below
            above = allowed
            while True:
                t, up_closed = above, True
                while t:
                    u = (t & -t).bit_length() - 1
                    if ups[u] & ~above:
                        up_closed = False
                        break
                    t &= t - 1
                if up_closed:
                    # `allowed` already forces below-element x above-element pairs
                    # to be related, so the extension stays transitive.
                    new_ups = tuple(ups[i] | (1 << m) if below >> i & 1 else ups[i] for i in range(m)) + (above,)
                    new_downs = tuple(downs[i] | (1 << m) if above >> i & 1 else downs[i] for i in range(m)) + (below,)
                    yield from extend(new_ups, new_downs)
                if above == 0:
                    break
                above = (above - 1) & allowed

    for ups, _downs in extend((), ()):
        lt = np.zeros((n, n), dtype=bool)
        for i in range(n):
            for j in range(n):
                if ups[i] >> j & 1:
                    lt[i, j] = True
        yield Poset(labels, lt)


def random_poset(n: int, seed: int, num_linear_orders: int = 2) -> Poset:
    """Intersection of ``num_linear_orders`` seeded random linear orders on n elements.

    Deterministic for a fixed (n, seed, num_linear_orders). Elements are
    named v0..v{n-1}.
    """
    if n < 0:
        raise InvalidSizeError(f"n must be >= 0, got {n}")
    if num_linear_orders < 2:
        raise InvalidSizeError(
            f"need at least 2 linear orders, got {num_linear_orders}"
        )
    rng = np.random.default_rng(seed)
    lt = ~np.eye(n, dtype=bool)
    for _ in range(num_linear_orders):
        perm = rng.permutation(n)
        rank = np.empty(n, dtype=int)
        rank[perm] = np.arange(n)
        lt &= rank[:, None] < rank[None, :]
    return Poset(tuple(f"v{i}" for i in range(n)), lt)
