"""Certifying pipeline: a validated interval representation or a forbidden subposet.

:func:`certify` is the main entry point. It builds the endpoint digraph
for the requested length bound k and then either

* reads a representation straight off a potential (left endpoint = label
  of the left vertex, right endpoint = label of the right vertex), or
* runs the fewest-arc negative-cycle DP and replays the cycle's structure
  to exhibit an induced 2+2 or (k+2)-chain-plus-one.

Both outputs are re-validated before they are returned, so every answer
ships with a checked witness. Endpoints are exact rationals stored as
scaled integers over the digraph's common denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .digraph import (
    ArcKind,
    Side,
    WeightedDigraph,
    constraint_digraph,
    constraint_digraph_bounds,
)
from .errors import (
    ElementMismatchError,
    InfeasiblePotentialError,
    InternalContractError,
    NonMinimalCycleError,
)
from .poset import ChainPlusOne, ForbiddenSubposet, Poset, TwoPlusTwo, verify_forbidden
from .solver import NegativeCycle, Potential, _fewest_arc_cycle, find_potential


@dataclass(frozen=True, eq=False)
class IntervalRepresentation:
    """Closed intervals with exact rational endpoints p / scale.

    ``lefts`` and ``rights`` are scaled integers aligned with ``elements``;
    all endpoints share the single denominator ``scale``.
    """

    elements: tuple[str, ...]
    lefts: tuple[int, ...]
    rights: tuple[int, ...]
    scale: int

    def __post_init__(self) -> None:
        if not (len(self.elements) == len(self.lefts) == len(self.rights)):
            raise ValueError("endpoint arrays must align with elements")
        if self.scale < 1:
            raise ValueError(f"scale must be >= 1, got {self.scale}")

    def scaled_interval(self, x: str) -> tuple[int, int]:
        i = self.elements.index(x)
        return self.lefts[i], self.rights[i]

    def interval(self, x: str) -> tuple[Fraction, Fraction]:
        lo, hi = self.scaled_interval(x)
        return Fraction(lo, self.scale), Fraction(hi, self.scale)

    def length(self, x: str) -> Fraction:
        lo, hi = self.scaled_interval(x)
        return Fraction(hi - lo, self.scale)

    def as_dict(self) -> dict[str, tuple[Fraction, Fraction]]:
        return {x: self.interval(x) for x in self.elements}


@dataclass(frozen=True)
class Violation:
    """First check a representation failed: a length bound or an order pair."""

    kind: str  # "length" or "order"
    elements: tuple[str, ...]
    message: str

    def __str__(self) -> str:
        return self.message


@dataclass(frozen=True)
class Certificate:
    """Outcome of :func:`certify`: exactly one of the two witnesses."""

    representation: IntervalRepresentation | None = None
    forbidden: ForbiddenSubposet | None = None

    def __post_init__(self) -> None:
        if (self.representation is None) == (self.forbidden is None):
            raise ValueError("certificate must hold exactly one witness")

    @property
    def is_representable(self) -> bool:
        return self.representation is not None


@dataclass(frozen=True)
class NoRepresentation:
    """Negative answer for general [m, n] bounds.

    Carries only the offending negative cycle (useful for debugging); no
    forbidden-subposet characterization is available for general bounds.
    """

    cycle: NegativeCycle


def representation_from_potential(poset: Poset, potential: Potential) -> IntervalRepresentation:
    """Read intervals off a potential: left label, right label per element.

    Defensively re-checks the potential against its digraph first and
    raises :class:`InfeasiblePotentialError` if anything is off (that
    would be a solver bug, not a property of the poset).
    """
    graph = potential.digraph
    expected = tuple(v.element for v in graph.vertices[::2])
    if expected != poset.elements:
        raise ElementMismatchError("potential's digraph does not match the poset")
    bad = potential.values[graph.heads] - potential.values[graph.tails] > graph.weights
    if bad.any():
        arc = graph.arc(int(bad.argmax()))
        raise InfeasiblePotentialError(f"potential violates arc {arc}")
    lefts = tuple(int(potential.values[2 * i]) for i in range(len(poset)))
    rights = tuple(int(potential.values[2 * i + 1]) for i in range(len(poset)))
    return IntervalRepresentation(poset.elements, lefts, rights, graph.scale)


def validate_representation(
    poset: Poset,
    rep: IntervalRepresentation,
    lo: int | Fraction,
    hi: int | Fraction,
) -> Violation | None:
    """Exact check: every length in [lo, hi] and x below y iff R(x) < L(y).

    Returns None when everything holds, otherwise the first violation
    (lengths in element order first, then ordered pairs row-major).
    Raises :class:`ElementMismatchError` if the element sets differ.
    """
    if set(rep.elements) != set(poset.elements):
        raise ElementMismatchError("representation does not cover exactly the poset's elements")
    lo, hi = Fraction(lo), Fraction(hi)
    order = [rep.elements.index(x) for x in poset.elements]
    lefts = np.array([rep.lefts[i] for i in order], dtype=np.int64)
    rights = np.array([rep.rights[i] for i in order], dtype=np.int64)

    for pos, x in enumerate(poset.elements):
        length = Fraction(int(rights[pos] - lefts[pos]), rep.scale)
        if length < lo or length > hi:
            return Violation(
                "length",
                (x,),
                f"length of {x} is {length} which is outside [{lo}, {hi}]",
            )

    strictly_left = rights[:, None] < lefts[None, :]
    np.fill_diagonal(strictly_left, False)
    mismatch = strictly_left != poset.lt
    np.fill_diagonal(mismatch, False)
    if mismatch.any():
        i, j = np.unravel_index(int(mismatch.argmax()), mismatch.shape)
        x, y = poset.elements[i], poset.elements[j]
        if poset.lt[i, j]:
            msg = f"{x} is below {y} but interval of {x} is not strictly left of {y}'s"
        else:
            msg = f"interval of {x} is strictly left of {y}'s but {x} is not below {y}"
        return Violation("order", (x, y), msg)
    return None


def forbidden_from_cycle(poset: Poset, k: int, cycle: NegativeCycle) -> ForbiddenSubposet:
    """Turn a fewest-arc negative cycle into a verified forbidden subposet.

    Replays the structure of the cycle: a (strict-gap, overlap, strict-gap)
    window yields a 2+2; otherwise the segment that follows a max-len arc
    spells out a (k+2)-chain plus an incomparable element. Any branch that
    a genuinely fewest-arc cycle cannot take raises
    :class:`NonMinimalCycleError`, which signals a solver bug.
    """
    arcs = list(cycle.arcs)
    m = len(arcs)

    def vindex(v):
        return 2 * poset.index(v.element) + (1 if v.side is Side.RIGHT else 0)

    shift = min(range(m), key=lambda i: vindex(arcs[i].tail))
    arcs = arcs[shift:] + arcs[:shift]

    witness = _scan_two_plus_two(poset, arcs)
    if witness is None:
        witness = _scan_chain_plus_one(poset, k, arcs)
    if witness is None:
        raise NonMinimalCycleError(
            "cycle has neither a gap-overlap-gap window nor a max-len arc; "
            "a fewest-arc negative cycle cannot look like this"
        )
    if not verify_forbidden(poset, witness, k):
        raise NonMinimalCycleError(f"extracted witness {witness} failed verification")
    return witness


def _scan_two_plus_two(poset: Poset, arcs: list) -> TwoPlusTwo | None:
    m = len(arcs)
    for s in range(m):
        window = [arcs[s], arcs[(s + 1) % m], arcs[(s + 2) % m]]
        if [a.kind for a in window] != [ArcKind.STRICT_GAP, ArcKind.OVERLAP, ArcKind.STRICT_GAP]:
            continue
        upper1 = window[0].tail.element  # upper1 above lower1
        lower1 = window[0].head.element
        upper2 = window[1].head.element  # lower1 incomparable to upper2
        lower2 = window[2].head.element  # upper2 above lower2
        if not (
            poset.less(lower1, upper1)
            and poset.incomparable(lower1, upper2)
            and poset.less(lower2, upper2)
        ):
            raise InternalContractError("cycle arcs disagree with the poset relation")
        if poset.incomparable(upper1, lower2):
            return TwoPlusTwo(((lower1, upper1), (lower2, upper2)))
        if poset.less(lower2, upper1):
            # The two gap arcs could be shortcut into one; the cycle was not minimal.
            raise NonMinimalCycleError(
                f"{upper1} is above {lower2}, so the window admits a shorter cycle"
            )
        raise InternalContractError("gap window contradicts transitivity of the poset")
    return None


def _scan_chain_plus_one(poset: Poset, k: int, arcs: list) -> ChainPlusOne | None:
    m = len(arcs)
    try:
        anchor = next(i for i in range(m) if arcs[i].kind is ArcKind.MAX_LEN)
    except StopIteration:
        return None

    def arc_at(offset: int):
        return arcs[(anchor + offset) % m]

    lone = arc_at(0).tail.element
    if arc_at(1).kind is not ArcKind.OVERLAP:
        raise NonMinimalCycleError("max-len arc is not followed by an overlap arc")
    chain_top_down = [arc_at(1).head.element]
    for step in range(k):
        gap = arc_at(2 + 2 * step)
        stay = arc_at(3 + 2 * step)
        if gap.kind is not ArcKind.STRICT_GAP or stay.kind is not ArcKind.MIN_LEN:
            raise NonMinimalCycleError(
                "segment after the max-len arc does not alternate strict-gap/min-len"
            )
        if gap.tail.element != chain_top_down[-1] or stay.head.element != gap.head.element:
            raise InternalContractError("segment arcs are not stitched element-to-element")
        chain_top_down.append(gap.head.element)
    closing = arc_at(2 + 2 * k)
    if closing.kind is not ArcKind.STRICT_GAP:
        raise NonMinimalCycleError("chain segment does not end with a strict-gap arc")
    if closing.tail.element != chain_top_down[-1]:
        raise InternalContractError("closing arc is not stitched to the chain")
    chain_top_down.append(closing.head.element)

    bottom = chain_top_down[-1]
    if poset.less(lone, bottom):
        # Transitivity would put the lone element below the chain top, which
        # contradicts the overlap arc right after the anchor.
        raise InternalContractError("lone element sits below the chain bottom")
    if poset.less(bottom, lone):
        # The whole segment could be shortcut by one gap arc; not minimal.
        raise NonMinimalCycleError(f"{lone} is above {bottom}, segment admits a shortcut")
    return ChainPlusOne(tuple(reversed(chain_top_down)), lone)


def certify(poset: Poset, k: int, *, scale: int | None = None) -> Certificate:
    """Representation with lengths in [1, k], or a forbidden induced subposet.

    The returned witness is always re-validated: representations pass
    :func:`validate_representation` with bounds [1, k], forbidden patterns
    pass :func:`verify_forbidden`.
    """
    graph = constraint_digraph(poset, k, scale=scale)
    potential = find_potential(graph)
    if potential is not None:
        rep = representation_from_potential(poset, potential)
        violation = validate_representation(poset, rep, 1, k)
        if violation is not None:
            raise InfeasiblePotentialError(f"solver produced an invalid representation: {violation}")
        return Certificate(representation=rep)
    cycle = _fewest_arc_cycle(graph)
    witness = forbidden_from_cycle(poset, k, cycle)
    return Certificate(forbidden=witness)


def represent_with_bounds(
    poset: Poset, min_len: int, max_len: int, *, scale: int | None = None
) -> IntervalRepresentation | NoRepresentation:
    """Representation with lengths in [min_len, max_len], or the blocking cycle.

    Unlike :func:`certify` there is no forbidden-subposet witness here;
    for general integer bounds the negative answer only carries the
    negative cycle itself.
    """
    graph = constraint_digraph_bounds(poset, min_len, max_len, scale=scale)
    potential = find_potential(graph)
    if potential is None:
        return NoRepresentation(_fewest_arc_cycle(graph))
    rep = representation_from_potential(poset, potential)
    violation = validate_representation(poset, rep, min_len, max_len)
    if violation is not None:
        raise InfeasiblePotentialError(f"solver produced an invalid representation: {violation}")
    return rep
