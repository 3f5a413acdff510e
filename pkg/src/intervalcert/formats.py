"""Text and JSON encodings for posets, representations and certificates.

Poset text format::

    # comment lines and blank lines are ignored
    mode: raw            # optional header, raw (default) or covers
    elements: a b c x
    a < b
    b < c

Representation text format, one interval per element, all endpoints over
one common denominator::

    a: [-3/7, 4/7]
    b: [5/7, 12/7]

Both formats also have a JSON mirror carrying field-for-field the same
information; :func:`parse_poset` and :func:`parse_representation` sniff
which of the two encodings they were given.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .certify import Certificate, IntervalRepresentation, NoRepresentation, Violation
from .digraph import WeightedDigraph
from .errors import ParseError
from .poset import ChainPlusOne, ForbiddenSubposet, Poset, TwoPlusTwo

# -- poset ----------------------------------------------------------------


def poset_to_text(poset: Poset) -> str:
    """Serialize as cover pairs (the default raw mode closes them back up)."""
    lines = ["elements: " + " ".join(poset.elements)]
    lines += [f"{a} < {b}" for a, b in poset.cover_pairs()]
    return "\n".join(lines) + "\n"


def poset_to_json_obj(poset: Poset) -> dict[str, Any]:
    return {
        "elements": list(poset.elements),
        "relations": [[a, b] for a, b in poset.cover_pairs()],
        "mode": "raw",
    }


def parse_poset_text(text: str) -> Poset:
    mode = "raw"
    elements: list[str] | None = None
    pairs: list[tuple[str, str]] = []
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("mode:"):
            mode = line[len("mode:") :].strip()
            if mode not in ("raw", "covers"):
                raise ParseError(f"mode must be raw or covers, got {mode!r}", lineno)
            continue
        if line.startswith("elements:"):
            if elements is not None:
                raise ParseError("duplicate elements line", lineno)
            elements = line[len("elements:") :].split()
            continue
        if elements is None:
            raise ParseError(f"expected an 'elements:' line before {line!r}", lineno)
        parts = line.split("<")
        if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
            raise ParseError(f"expected 'a < b', got {line!r}", lineno)
        a, b = parts[0].split(), parts[1].split()
        if len(a) != 1 or len(b) != 1:
            raise ParseError(f"expected single identifiers around '<' in {line!r}", lineno)
        pairs.append((a[0], b[0]))
    if elements is None:
        raise ParseError("missing 'elements:' line")
    return Poset.from_relations(elements, pairs, mode=mode)


def parse_poset_json_obj(obj: dict[str, Any]) -> Poset:
    try:
        elements = obj["elements"]
        relations = [tuple(p) for p in obj.get("relations", [])]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed poset JSON: {exc}") from exc
    return Poset.from_relations(elements, relations, mode=obj.get("mode", "raw"))


def parse_poset(text: str) -> Poset:
    """Parse either encoding; JSON input starts with '{'."""
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return parse_poset_json_obj(obj)
    return parse_poset_text(text)


# -- representation --------------------------------------------------------

_INTERVAL_LINE = re.compile(
    r"^(?P<elem>\S+):\s*\[\s*(?P<ln>-?\d+)/(?P<ld>\d+)\s*,\s*(?P<rn>-?\d+)/(?P<rd>\d+)\s*\]$"
)


def representation_to_text(rep: IntervalRepresentation, decimal: bool = False) -> str:
    lines = []
    for x, lo, hi in zip(rep.elements, rep.lefts, rep.rights):
        line = f"{x}: [{lo}/{rep.scale}, {hi}/{rep.scale}]"
        if decimal:
            line += f"  # ~[{lo / rep.scale:.4f}, {hi / rep.scale:.4f}]"
        lines.append(line)
    return "\n".join(lines) + ("\n" if lines else "")


def representation_to_json_obj(rep: IntervalRepresentation) -> dict[str, Any]:
    return {
        "scale": rep.scale,
        "intervals": {x: [lo, hi] for x, lo, hi in zip(rep.elements, rep.lefts, rep.rights)},
    }


def parse_representation_text(text: str) -> IntervalRepresentation:
    elements: list[str] = []
    lefts: list[int] = []
    rights: list[int] = []
    scale: int | None = None
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        m = _INTERVAL_LINE.match(line)
        if m is None:
            raise ParseError(f"expected 'x: [p/S, q/S]', got {line!r}", lineno)
        ld, rd = int(m["ld"]), int(m["rd"])
        if ld != rd:
            raise ParseError(f"mixed denominators {ld} and {rd} on one line", lineno)
        if ld == 0:
            raise ParseError("denominator must be positive", lineno)
        if scale is None:
            scale = ld
        elif scale != ld:
            raise ParseError(f"denominator {ld} differs from earlier {scale}", lineno)
        elements.append(m["elem"])
        lefts.append(int(m["ln"]))
        rights.append(int(m["rn"]))
    return IntervalRepresentation(tuple(elements), tuple(lefts), tuple(rights), scale or 1)


def parse_representation_json_obj(obj: dict[str, Any]) -> IntervalRepresentation:
    try:
        scale = int(obj["scale"])
        intervals = obj["intervals"]
        elements = tuple(intervals)
        lefts = tuple(int(intervals[x][0]) for x in elements)
        rights = tuple(int(intervals[x][1]) for x in elements)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"malformed representation JSON: {exc}") from exc
    return IntervalRepresentation(elements, lefts, rights, scale)


def parse_representation(text: str) -> IntervalRepresentation:
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return parse_representation_json_obj(obj)
    return parse_representation_text(text)


# -- forbidden subposets and certificates -----------------------------------


def forbidden_to_text(forbidden: ForbiddenSubposet) -> str:
    lines = [f"kind: {forbidden.kind}"]
    if isinstance(forbidden, TwoPlusTwo):
        for chain in forbidden.chains:
            lines.append("chain: " + " ".join(chain))
    else:
        lines.append("chain: " + " ".join(forbidden.chain))
        lines.append(f"lone: {forbidden.lone}")
    return "\n".join(lines) + "\n"


def forbidden_to_json_obj(forbidden: ForbiddenSubposet) -> dict[str, Any]:
    if isinstance(forbidden, TwoPlusTwo):
        return {"kind": forbidden.kind, "chains": [list(c) for c in forbidden.chains]}
    return {"kind": forbidden.kind, "chain": list(forbidden.chain), "lone": forbidden.lone}


def certificate_to_text(cert: Certificate, decimal: bool = False) -> str:
    if cert.representation is not None:
        return representation_to_text(cert.representation, decimal=decimal)
    return forbidden_to_text(cert.forbidden)


def certificate_to_json_obj(cert: Certificate) -> dict[str, Any]:
    if cert.representation is not None:
        return {"result": "representation", **representation_to_json_obj(cert.representation)}
    return {"result": "forbidden", **forbidden_to_json_obj(cert.forbidden)}


def violation_to_json_obj(violation: Violation) -> dict[str, Any]:
    return {
        "result": "violation",
        "kind": violation.kind,
        "elements": list(violation.elements),
        "message": violation.message,
    }


def no_representation_to_json_obj(answer: NoRepresentation) -> dict[str, Any]:
    return {
        "result": "no-representation",
        "cycle_arcs": len(answer.cycle.arcs),
        "cycle_weight": answer.cycle.total_weight,
    }


# -- digraph debug dump ------------------------------------------------------


def digraph_to_text(graph: WeightedDigraph) -> str:
    """One arc per line: tail head scaled_weight kind."""
    lines = [f"# scale {graph.scale}, lengths [{graph.min_len}, {graph.max_len}]"]
    for arc in graph.arcs:
        lines.append(f"{arc.tail} {arc.head} {arc.weight} {arc.kind.value}")
    return "\n".join(lines) + "\n"
