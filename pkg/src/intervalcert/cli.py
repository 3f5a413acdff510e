"""Command-line front end.

Exit codes separate the mathematics from the tooling: 0 means the positive
answer (representable / valid / agreement), 2 the negative mathematical
answer (forbidden subposet found / no representation / violation), 1 a
usage or input error, and 3 a selfcheck discrepancy.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import formats
from .certify import NoRepresentation, certify, represent_with_bounds, validate_representation
from .errors import IntervalCertError
from .poset import chain_plus_one, enumerate_posets, random_poset, search_forbidden
from .digraph import constraint_digraph, constraint_digraph_bounds

FORMAT_ENV_VAR = "INTERVALCERT_FORMAT"


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors, but exit code 2 is reserved for the
    # negative mathematical answer; remap to 1.
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise IntervalCertError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(args, text_form: str, json_obj) -> None:
    if args.format == "json":
        print(json.dumps(json_obj, indent=2))
    else:
        sys.stdout.write(text_form)


def _dump_debug_graph(args, graph) -> None:
    if getattr(args, "debug_graph", None):
        with open(args.debug_graph, "w", encoding="utf-8") as fh:
            fh.write(formats.digraph_to_text(graph))


def _cmd_certify(args) -> int:
    poset = formats.parse_poset(_read_input(args.input))
    if args.debug_graph:
        _dump_debug_graph(args, constraint_digraph(poset, args.k))
    cert = certify(poset, args.k)
    _emit(
        args,
        formats.certificate_to_text(cert, decimal=args.decimal),
        formats.certificate_to_json_obj(cert),
    )
    return 0 if cert.is_representable else 2


def _cmd_represent(args) -> int:
    poset = formats.parse_poset(_read_input(args.input))
    if args.debug_graph:
        _dump_debug_graph(args, constraint_digraph_bounds(poset, args.m, args.n))
    answer = represent_with_bounds(poset, args.m, args.n)
    if isinstance(answer, NoRepresentation):
        text = (
            "no-representation\n"
            f"cycle-arcs: {len(answer.cycle.arcs)}\n"
            f"cycle-weight: {answer.cycle.total_weight}\n"
        )
        _emit(args, text, formats.no_representation_to_json_obj(answer))
        return 2
    _emit(
        args,
        formats.representation_to_text(answer, decimal=args.decimal),
        {"result": "representation", **formats.representation_to_json_obj(answer)},
    )
    return 0


def _cmd_validate(args) -> int:
    poset = formats.parse_poset(_read_input(args.input))
    rep = formats.parse_representation(_read_input(args.repfile))
    violation = validate_representation(poset, rep, 1, args.k)
    if violation is None:
        _emit(args, "ok\n", {"result": "ok"})
        return 0
    _emit(args, f"violation: {violation.message}\n", formats.violation_to_json_obj(violation))
    return 2


def _cmd_oracle(args) -> int:
    poset = formats.parse_poset(_read_input(args.input))
    witness = search_forbidden(poset, args.k)
    if witness is None:
        _emit(args, "no forbidden subposet found\n", {"result": "none"})
        return 0
    _emit(
        args,
        formats.forbidden_to_text(witness),
        {"result": "forbidden", **formats.forbidden_to_json_obj(witness)},
    )
    return 2


def _cmd_gen(args) -> int:
    if args.generator == "chain-plus-one":
        poset = chain_plus_one(args.n)
    else:
        poset = random_poset(args.n, args.seed, args.orders)
    _emit(args, formats.poset_to_text(poset), formats.poset_to_json_obj(poset))
    return 0


def _cmd_selfcheck(args) -> int:
    checked = 0
    for n in range(1, args.max_n + 1):
        for poset in enumerate_posets(n):
            for k in range(1, args.k_max + 1):
                cert = certify(poset, k)
                witness = search_forbidden(poset, k)
                checked += 1
                if cert.is_representable != (witness is None):
                    print("selfcheck discrepancy:")
                    print(f"  n={n} k={k}")
                    print(f"  certify: {'representable' if cert.is_representable else 'forbidden'}")
                    print(f"  direct search: {'none' if witness is None else witness.kind}")
                    sys.stdout.write(formats.poset_to_text(poset))
                    return 3
        print(f"n={n}: all posets agree for k=1..{args.k_max}")
    print(f"selfcheck passed: {checked} certify/search comparisons")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="intervalcert",
        description=(
            "Construct interval representations of a finite poset with lengths "
            "in [1, k], or exhibit the forbidden induced subposet that rules them out."
        ),
    )
    default_format = os.environ.get(FORMAT_ENV_VAR, "text")
    if default_format not in ("text", "json"):
        default_format = "text"
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_decimal=True, with_debug=True):
        p.add_argument("--format", choices=("text", "json"), default=default_format,
                       help=f"output format (default from ${FORMAT_ENV_VAR} or text)")
        if with_decimal:
            p.add_argument("--decimal", action="store_true",
                           help="annotate rational endpoints with decimal approximations")
        if with_debug:
            p.add_argument("--debug-graph", metavar="PATH",
                           help="dump the scaled endpoint digraph to PATH")

    p = sub.add_parser("certify", help="representation with lengths in [1, k] or forbidden subposet")
    p.add_argument("--k", type=int, required=True, help="maximum interval length (>= 1)")
    p.add_argument("input", help="poset file, or - for stdin")
    add_common(p)
    p.set_defaults(fn=_cmd_certify)

    p = sub.add_parser("represent", help="representation with lengths in [m, n], no pattern certificate")
    p.add_argument("--m", type=int, required=True, help="minimum interval length (>= 1)")
    p.add_argument("--n", type=int, required=True, help="maximum interval length (>= m)")
    p.add_argument("input", help="poset file, or - for stdin")
    add_common(p)
    p.set_defaults(fn=_cmd_represent)

    p = sub.add_parser("validate", help="re-check a representation file against a poset")
    p.add_argument("--k", type=int, required=True, help="maximum interval length (>= 1)")
    p.add_argument("input", help="poset file, or - for stdin")
    p.add_argument("repfile", help="representation file")
    add_common(p, with_decimal=False, with_debug=False)
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("oracle", help="direct forbidden-pattern search, no digraph involved")
    p.add_argument("--k", type=int, required=True, help="maximum interval length (>= 1)")
    p.add_argument("input", help="poset file, or - for stdin")
    add_common(p, with_decimal=False, with_debug=False)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("gen", help="emit a poset file")
    gensub = p.add_subparsers(dest="generator", required=True)
    g = gensub.add_parser("chain-plus-one", help="an n-chain plus one incomparable element")
    g.add_argument("n", type=int, help="chain length (>= 1)")
    add_common(g, with_decimal=False, with_debug=False)
    g.set_defaults(fn=_cmd_gen)
    g = gensub.add_parser("random", help="intersection of seeded random linear orders")
    g.add_argument("--n", type=int, required=True, help="number of elements")
    g.add_argument("--seed", type=int, required=True, help="RNG seed")
    g.add_argument("--orders", type=int, default=2, help="number of linear orders (>= 2)")
    add_common(g, with_decimal=False, with_debug=False)
    g.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("selfcheck", help="exhaustive certify-vs-search agreement suite")
    p.add_argument("--max-n", type=int, default=4, help="largest ground-set size (<= 6)")
    p.add_argument("--k-max", type=int, default=2, help="largest k to test")
    p.set_defaults(fn=_cmd_selfcheck)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except IntervalCertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
