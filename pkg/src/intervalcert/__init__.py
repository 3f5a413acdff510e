"""Certified bounded-length interval representations of finite posets.

Given a finite poset and an integer k >= 1, :func:`certify` either
constructs an interval representation with every length in [1, k] (exact
rational endpoints) or returns an induced forbidden subposet -- a 2+2 or a
(k+2)-chain plus an incomparable element -- and always re-validates its
own answer before returning it.

The machinery underneath: a difference-constraint digraph on interval
endpoints (:mod:`intervalcert.digraph`), an exact integer potential /
fewest-arc negative-cycle solver (:mod:`intervalcert.solver`), and the
witness extraction pipeline (:mod:`intervalcert.certify`). Poset types,
generators and the digraph-free direct pattern search live in
:mod:`intervalcert.poset`; file encodings in :mod:`intervalcert.formats`.
"""

from .certify import (
    Certificate,
    IntervalRepresentation,
    NoRepresentation,
    Violation,
    certify,
    forbidden_from_cycle,
    represent_with_bounds,
    representation_from_potential,
    validate_representation,
)
from .digraph import (
    Arc,
    ArcKind,
    Side,
    VertexId,
    WeightedDigraph,
    constraint_digraph,
    constraint_digraph_bounds,
)
from .poset import (
    ChainPlusOne,
    ForbiddenSubposet,
    Poset,
    TwoPlusTwo,
    chain_plus_one,
    enumerate_posets,
    random_poset,
    search_forbidden,
    verify_forbidden,
)
from .solver import NegativeCycle, Potential, find_potential, min_arc_negative_cycle
from . import errors, formats

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "ArcKind",
    "Certificate",
    "ChainPlusOne",
    "ForbiddenSubposet",
    "IntervalRepresentation",
    "NegativeCycle",
    "NoRepresentation",
    "Poset",
    "Potential",
    "Side",
    "TwoPlusTwo",
    "VertexId",
    "Violation",
    "WeightedDigraph",
    "certify",
    "chain_plus_one",
    "constraint_digraph",
    "constraint_digraph_bounds",
    "enumerate_posets",
    "errors",
    "find_potential",
    "forbidden_from_cycle",
    "formats",
    "min_arc_negative_cycle",
    "random_poset",
    "represent_with_bounds",
    "representation_from_potential",
    "search_forbidden",
    "validate_representation",
    "verify_forbidden",
]
