"""Exact integer shortest-walk engine over the endpoint digraph.

Two entry points:

* :func:`find_potential` -- label-correcting relaxation from a virtual
  zero-weight super-source (all labels start at 0). If it stabilizes, the
  labels are the minimum walk weight into each vertex, which is a valid
  potential; if labels still improve after |V| rounds, a negative cycle
  exists.
* :func:`min_arc_negative_cycle` -- a min-plus dynamic program over exact
  walk lengths t = 1, 2, ... that returns a negative cycle with the fewest
  possible arcs. The first t whose distance matrix shows a negative
  diagonal entry is that minimum, and any negative closed walk realizing
  it is necessarily simple (a repeated vertex would split it into two
  shorter closed walks, one of them negative).

All weights are scaled integers from the digraph builder. The relaxation
works in int64 (headroom asserted at build time); the DP uses float64 with
+inf for absent arcs, which is still exact because every finite entry is
an integer far below 2**53, and the reconstructed cycle is re-summed in
Python integers as a final check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .digraph import Arc, VertexId, WeightedDigraph
from .errors import InternalContractError


@dataclass(frozen=True, eq=False)
class Potential:
    """Integer vertex labels with value[head] - value[tail] <= weight on every arc."""

    digraph: WeightedDigraph
    values: np.ndarray  # int64, aligned with digraph.vertices

    def __post_init__(self) -> None:
        self.values.setflags(write=False)

    def value(self, v: VertexId) -> int:
        return int(self.values[self.digraph.vertex_index(v)])


@dataclass(frozen=True)
class NegativeCycle:
    """A simple negative cycle, stored as its arc sequence in walk order."""

    arcs: tuple[Arc, ...]
    total_weight: int

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def __post_init__(self) -> None:
        if self.total_weight >= 0:
            raise InternalContractError("cycle weight is not negative")
        n = len(self.arcs)
        if n < 4 or n % 2 != 0:
            raise InternalContractError(f"negative cycle must have an even count >= 4 arcs, got {n}")
        for i, arc in enumerate(self.arcs):
            if arc.head != self.arcs[(i + 1) % n].tail:
                raise InternalContractError("arc sequence is not a closed walk")
        visited = [a.tail for a in self.arcs]
        if len(set(visited)) != n:
            raise InternalContractError("cycle visits a vertex twice")
        if sum(a.weight for a in self.arcs) != self.total_weight:
            raise InternalContractError("stored weight disagrees with arc weights")


def find_potential(graph: WeightedDigraph) -> Potential | None:
    """Minimum walk weight into every vertex, or None if a negative cycle exists.

    Detection here carries no minimality guarantee; use
    :func:`min_arc_negative_cycle` when the cycle itself is needed.
    """
    nv = len(graph.vertices)
    if nv == 0 or graph.arc_count == 0:
        return Potential(graph, np.zeros(nv, dtype=np.int64))

    order = np.argsort(graph.heads, kind="stable")
    tails = graph.tails[order]
    heads = graph.heads[order]
    weights = graph.weights[order]
    group_heads, group_starts = np.unique(heads, return_index=True)

    # Without negative cycles the labels are optimal within nv - 1 passes,
    # so a pass that still improves at round nv proves a negative cycle.
    dist = np.zeros(nv, dtype=np.int64)
    for _ in range(nv):
        candidates = dist[tails] + weights
        group_min = np.minimum.reduceat(candidates, group_starts)
        improved = group_min < dist[group_heads]
        if not improved.any():
            if (dist[graph.heads] - dist[graph.tails] > graph.weights).any():
                raise InternalContractError("stabilized labels violate an arc constraint")
            return Potential(graph, dist)
        dist[group_heads[improved]] = group_min[improved]
    # Still improving after |V| passes: some negative cycle feeds the labels.
    return None


def min_arc_negative_cycle(graph: WeightedDigraph) -> NegativeCycle | None:
    """A negative cycle with the fewest arcs over the whole digraph, or None."""
    if find_potential(graph) is not None:
        return None
    return _fewest_arc_cycle(graph)


def _fewest_arc_cycle(graph: WeightedDigraph) -> NegativeCycle:
    """Min-plus DP over walk lengths; caller guarantees a negative cycle exists."""
    nv = len(graph.vertices)
    adj = np.full((nv, nv), np.inf)
    adj[graph.tails, graph.heads] = graph.weights
    arc_ids = np.full((nv, nv), -1, dtype=np.int64)
    arc_ids[graph.tails, graph.heads] = np.arange(graph.arc_count)

    dist = adj.copy()  # dist[u, v]: min weight over walks u -> v with exactly t arcs
    parents: list[np.ndarray] = []
    for _t in range(2, 2 * nv + 1):
        stacked = dist[:, :, None] + adj[None, :, :]
        step_parent = stacked.argmin(axis=1).astype(np.int32)  # ties: lowest vertex index
        dist = np.take_along_axis(stacked, step_parent[:, None, :].astype(np.int64), axis=1)[:, 0, :]
        parents.append(step_parent)
        diagonal = np.diagonal(dist)
        if (diagonal < 0).any():
            start = int((diagonal < 0).argmax())
            return _reconstruct(graph, arc_ids, parents, start, float(diagonal[start]))
    raise InternalContractError("negative cycle was detected but the walk DP never saw one")


def _reconstruct(
    graph: WeightedDigraph,
    arc_ids: np.ndarray,
    parents: list[np.ndarray],
    start: int,
    dp_weight: float,
) -> NegativeCycle:
    tail_first = [start]
    cursor = start
    for step_parent in reversed(parents):
        cursor = int(step_parent[start, cursor])
        tail_first.append(cursor)
    # tail_first is [start, w_{t-1}, ..., w_1]; forward vertex order:
    verts = [start] + tail_first[1:][::-1]
    arcs = []
    for i, u in enumerate(verts):
        v = verts[(i + 1) % len(verts)]
        aid = int(arc_ids[u, v])
        if aid < 0:
            raise InternalContractError("DP parent chain left the arc set")
        arcs.append(graph.arc(aid))
    total = sum(a.weight for a in arcs)
    if total != int(dp_weight):
        raise InternalContractError("reconstructed cycle weight disagrees with the DP")
    return NegativeCycle(tuple(arcs), total)
