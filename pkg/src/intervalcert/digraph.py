"""Difference-constraint digraph tying together the interval endpoints of a poset.

Every element x contributes a left-endpoint vertex and a right-endpoint
vertex. Arcs encode, as ``p(head) - p(tail) <= weight`` constraints on a
potential function p:

=============  =======================  ================  ==========================
kind           arc                      scaled weight     constraint on endpoints
=============  =======================  ================  ==========================
strict-gap     left(y) -> right(x)      -1                R(x) < L(y)  (x below y)
overlap        right(x) -> left(y)       0                L(y) <= R(x) (x, y incomparable)
min-len        right(x) -> left(x)      -min_len * S      R(x) - L(x) >= min_len
max-len        left(x) -> right(x)      +max_len * S      R(x) - L(x) <= max_len
=============  =======================  ================  ==========================

Real weights would need an infinitesimal margin for the strict gap; instead
everything is scaled by an integer S > 2n (default S = 2n + 1), the margin
becomes exactly -1, and all arithmetic downstream stays in integers. The
sign of every cycle is the same for any valid S, so the scale never changes
a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InvalidBoundsError, InvalidKError, InvalidScaleError
from .poset import Poset


class Side(Enum):
    LEFT = "l"
    RIGHT = "r"


class ArcKind(Enum):
    STRICT_GAP = "strict-gap"
    OVERLAP = "overlap"
    MIN_LEN = "min-len"
    MAX_LEN = "max-len"


_KIND_BY_CODE = (ArcKind.STRICT_GAP, ArcKind.OVERLAP, ArcKind.MIN_LEN, ArcKind.MAX_LEN)
_CODE_STRICT_GAP, _CODE_OVERLAP, _CODE_MIN_LEN, _CODE_MAX_LEN = range(4)


@dataclass(frozen=True)
class VertexId:
    side: Side
    element: str

    def __str__(self) -> str:
        return f"{self.side.value}:{self.element}"


@dataclass(frozen=True)
class Arc:
    tail: VertexId
    head: VertexId
    kind: ArcKind
    weight: int  # scaled integer


@dataclass(frozen=True, eq=False)
class WeightedDigraph:
    """Endpoint digraph with exact scaled-integer weights.

    Vertex i of the poset owns vertex indices 2i (left) and 2i + 1 (right).
    Arcs are stored columnar (tails/heads/weights/kinds aligned arrays) for
    vectorized solving; :meth:`arc` and :attr:`arcs` give the object view.
    """

    vertices: tuple[VertexId, ...]
    tails: np.ndarray
    heads: np.ndarray
    weights: np.ndarray
    kinds: np.ndarray
    scale: int
    min_len: int
    max_len: int

    def __post_init__(self) -> None:
        for name in ("tails", "heads", "weights", "kinds"):
            arr = getattr(self, name)
            arr.setflags(write=False)
        object.__setattr__(self, "_vindex", {v: i for i, v in enumerate(self.vertices)})

    @property
    def arc_count(self) -> int:
        return len(self.tails)

    def vertex_index(self, v: VertexId) -> int:
        return self._vindex[v]

    def arc(self, i: int) -> Arc:
        return Arc(
            self.vertices[self.tails[i]],
            self.vertices[self.heads[i]],
            _KIND_BY_CODE[self.kinds[i]],
            int(self.weights[i]),
        )

    @property
    def arcs(self) -> tuple[Arc, ...]:
        return tuple(self.arc(i) for i in range(self.arc_count))

    def __repr__(self) -> str:
        return (
            f"WeightedDigraph({len(self.vertices)} vertices, {self.arc_count} arcs, "
            f"scale={self.scale}, lengths=[{self.min_len}, {self.max_len}])"
        )


def constraint_digraph(poset: Poset, k: int, *, scale: int | None = None) -> WeightedDigraph:
    """Digraph whose potentials are exactly the representations with lengths in [1, k]."""
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise InvalidKError(f"k must be an integer >= 1, got {k!r}")
    return _build(poset, 1, int(k), scale)


def constraint_digraph_bounds(
    poset: Poset, min_len: int, max_len: int, *, scale: int | None = None
) -> WeightedDigraph:
    """Digraph for interval lengths in [min_len, max_len], integer bounds."""
    if min_len < 1 or max_len < min_len:
        raise InvalidBoundsError(
            f"bounds must satisfy 1 <= min_len <= max_len, got [{min_len}, {max_len}]"
        )
    return _build(poset, int(min_len), int(max_len), scale)


def _build(poset: Poset, min_len: int, max_len: int, scale: int | None) -> WeightedDigraph:
    n = len(poset)
    default_scale = 2 * n + 1
    if scale is None:
        scale = default_scale
    elif scale < default_scale:
        raise InvalidScaleError(f"scale must be >= {default_scale} for {n} elements, got {scale}")

    lt = poset.lt
    below_i, above_j = np.nonzero(lt)  # below_i[t] is strictly below above_j[t]
    inc = ~lt & ~lt.T & ~np.eye(n, dtype=bool)
    inc_i, inc_j = np.nonzero(inc)
    own = np.arange(n)

    left = lambda idx: 2 * idx  # noqa: E731
    right = lambda idx: 2 * idx + 1  # noqa: E731

    tails = np.concatenate([left(above_j), right(inc_i), right(own), left(own)])
    heads = np.concatenate([right(below_i), left(inc_j), left(own), right(own)])
    weights = np.concatenate(
        [
            np.full(len(below_i), -1, dtype=np.int64),
            np.zeros(len(inc_i), dtype=np.int64),
            np.full(n, -min_len * scale, dtype=np.int64),
            np.full(n, max_len * scale, dtype=np.int64),
        ]
    )
    kinds = np.concatenate(
        [
            np.full(len(below_i), _CODE_STRICT_GAP, dtype=np.uint8),
            np.full(len(inc_i), _CODE_OVERLAP, dtype=np.uint8),
            np.full(n, _CODE_MIN_LEN, dtype=np.uint8),
            np.full(n, _CODE_MAX_LEN, dtype=np.uint8),
        ]
    )
    tails = tails.astype(np.int32)
    heads = heads.astype(np.int32)

    # One arc per ordered vertex pair, by construction; a collision would
    # corrupt the adjacency-matrix view used by the cycle DP.
    assert len(np.unique(tails.astype(np.int64) * (2 * n) + heads)) == len(tails)
    assert len(tails) == len(below_i) + len(inc_i) + 2 * n
    # Walk-weight headroom: any walk has < 4n arcs of magnitude <= max_len * scale.
    assert 4 * n * max_len * scale < 2**62

    vertices = []
    for e in poset.elements:
        vertices.append(VertexId(Side.LEFT, e))
        vertices.append(VertexId(Side.RIGHT, e))
    return WeightedDigraph(
        tuple(vertices), tails, heads, weights, kinds, scale, min_len, max_len
    )
