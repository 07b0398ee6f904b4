"""Command-line front end: ``partcalc <command> ...``.

Operands are JSON texts given inline or read from ``--in FILE`` / stdin.
Results are printed as canonical JSON (or DOT for graphs with
``--format dot``).  Exit codes: 0 success, 1 operational error, 2 invalid
input or violated precondition, 3 suite failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import coalgebra, lie, suites
from .dot import export_dot
from .errors import KindMismatch, ParseError, PartcalcError, ValidationError
from .graphs import (
    AdmissibleGraph,
    FeynmanDiagram,
    bracket_graphs,
    insert_admissible,
    insert_graph,
    quotient_graph,
    selection_components,
    quotient_disconnected,
    subgraph,
)
from .linear import LinComb
from .partition import Partition, PartitionTuple, adjust, insert, quotient, restrict, sorted_atoms
from .serialize import (
    Document,
    block_from,
    dumps,
    lincomb_to,
    parse,
    parse_value,
    partition_from,
    sigma_to,
)


class UsageError(PartcalcError):
    """A command-line operand is missing or has the wrong kind."""


def _read_primary(args, inline: str | None) -> str:
    if inline is not None:
        return inline
    if args.infile:
        with open(args.infile, encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _doc(text: str, *kinds: str) -> Document:
    doc = parse(text)
    if kinds and doc.kind not in kinds:
        raise UsageError(f"expected a {' or '.join(kinds)} document, got {doc.kind}")
    return doc


def _partition(text: str) -> Partition:
    return _doc(text, "partition").payload


def _primary_partition(args) -> Partition:
    return _partition(_read_primary(args, args.p))


def _block(text: str) -> frozenset:
    return block_from(parse_value(text))


def _family(text: str) -> Partition:
    return partition_from(parse_value(text))


def _map(text: str) -> dict:
    raw = parse_value(text)
    if not isinstance(raw, dict) or not all(isinstance(v, int) for v in raw.values()):
        raise ValidationError("insertion map must be an object from atoms to block indices")
    return {str(k): v for k, v in raw.items()}


def _graph(text: str):
    doc = _doc(text, "feynman", "ordinary", "admissible")
    return doc.payload


def _lincomb_json(x: LinComb) -> dict:
    return {"kind": "lincomb", "terms": lincomb_to(x)}


# ---------------------------------------------------------------- commands

def cmd_quotient(args):
    P = _primary_partition(args)
    q = quotient(P, _block(args.b))
    return {"kind": "quotient", "partition": q.partition.to_lists(),
            "ideal_part": list(sorted_atoms(q.ideal_part)), "trivial": q.trivial}


def cmd_restrict(args):
    return restrict(_primary_partition(args), _block(args.b))


def cmd_insert(args):
    P = _primary_partition(args)
    return insert(P, args.a, _partition(args.q), _map(args.iota)).canonicalized()


def cmd_adjust(args):
    return adjust(_primary_partition(args), _family(args.f).blocks)


def cmd_coproduct(args):
    doc = _doc(_read_primary(args, args.p), "partition", "tuple")
    if args.reduced:
        return _lincomb_json(coalgebra.reduced_coproduct(doc.payload))
    if isinstance(doc.payload, PartitionTuple):
        return _lincomb_json(coalgebra.coproduct_tuple(doc.payload))
    return _lincomb_json(coalgebra.coproduct(doc.payload))


def cmd_compose(args):
    P, Q = _primary_partition(args), _partition(args.q)
    return _lincomb_json(lie.compose_signed(P, Q) if args.signed else lie.compose(P, Q))


def cmd_bracket(args):
    P, Q = _primary_partition(args), _partition(args.q)
    return _lincomb_json(lie.bracket_signed(P, Q) if args.signed else lie.bracket(P, Q))


def cmd_jacobi(args):
    P, Q, S = _primary_partition(args), _partition(args.q), _partition(args.s)
    fn = lie.jacobi_defect_signed if args.signed else lie.jacobi_defect
    return _lincomb_json(fn(P, Q, S))


def _selection(g, args):
    chosen = [list(b) for b in _family(args.select).blocks]
    if isinstance(g, AdmissibleGraph):
        second = [list(b) for b in _family(args.second).blocks] if args.second else []
        return (chosen, second)
    if args.second:
        raise UsageError("--second applies to admissible graphs only")
    return chosen


def cmd_graph_subgraph(args):
    g = _graph(_read_primary(args, args.g))
    return subgraph(g, _selection(g, args))


def cmd_graph_quotient(args):
    g = _graph(_read_primary(args, args.g))
    sel = _selection(g, args)
    if not isinstance(g, AdmissibleGraph):
        comps = selection_components(g, sel)
        if len(comps) > 1:
            return quotient_disconnected(g, comps)
    return quotient_graph(g, sel)


def cmd_graph_insert(args):
    host = _graph(_read_primary(args, args.g))
    guest = _graph(args.guest)
    if isinstance(host, AdmissibleGraph):
        kappa = _map(args.kappa) if args.kappa else None
        return insert_admissible(host, guest, args.mode, args.site, _map(args.iota), args.site2, kappa)
    return insert_graph(host, args.site, guest, _map(args.iota))


def cmd_graph_bracket(args):
    g1 = _graph(_read_primary(args, args.g))
    g2 = _graph(args.guest)
    if isinstance(g1, AdmissibleGraph):
        raise KindMismatch("bracket is lifted for Feynman and ordinary graphs only")
    result = bracket_graphs(g1, g2)
    return {"kind": "graph-lincomb", "graph_kind": g1.kind, **sigma_to(result.sigma),
            "terms": lincomb_to(result.terms)}


def cmd_graph_dot(args):
    return export_dot(_graph(_read_primary(args, args.g)))


def cmd_check(args):
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    if any(n not in suites.SUITES for n in names):
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(suites.SUITES)}")
    reports = [suites.run_suite(n, args.max_atoms, args.samples, args.seed) for n in names]
    body = [r.to_json(with_timing=args.timing) for r in reports]
    out = body[0] if len(body) == 1 else {"kind": "suite-reports", "reports": body,
                                           "passed": all(r.passed for r in reports)}
    return _SuiteOutput(out, all(r.passed for r in reports))


class _SuiteOutput:
    def __init__(self, body: dict, passed: bool):
        self.body = body
        self.passed = passed


# ---------------------------------------------------------------- parser

def _default_seed() -> int:
    raw = os.environ.get("PARTCALC_SEED")
    try:
        return int(raw) if raw else suites.DEFAULT_SEED
    except ValueError:
        return suites.DEFAULT_SEED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="infile", help="read the primary operand from FILE")
    common.add_argument("--out", dest="outfile", help="write the result to FILE")
    common.add_argument("--format", choices=("json", "dot"), default="json")

    parser = argparse.ArgumentParser(prog="partcalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, parent=sub):
        p = parent.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(fn=fn)
        return p

    p = add("quotient", cmd_quotient, "divide a partition by its restriction to a block")
    p.add_argument("-p", help="partition JSON (default: --in or stdin)")
    p.add_argument("-b", required=True, help="block JSON, e.g. '[\"2\",\"3\"]'")

    p = add("restrict", cmd_restrict, "restrict a partition to a block")
    p.add_argument("-p")
    p.add_argument("-b", required=True)

    p = add("insert", cmd_insert, "insert one partition into a block of another")
    p.add_argument("-p")
    p.add_argument("-a", type=int, required=True, help="host block index in canonical order")
    p.add_argument("-q", required=True, help="guest partition JSON")
    p.add_argument("--iota", required=True, help='insertion map, e.g. \'{"1":0}\'')

    p = add("adjust", cmd_adjust, "coarsen a family into an admissible one")
    p.add_argument("-p")
    p.add_argument("-f", required=True, help="family JSON (array of blocks)")

    p = add("coproduct", cmd_coproduct, "coproduct of a partition or tuple")
    p.add_argument("-p")
    p.add_argument("--reduced", action="store_true", help="drop the two boundary terms")

    for name, fn, text in (("compose", cmd_compose, "sum of all insertions of Q into P"),
                           ("bracket", cmd_bracket, "commutator of the composition")):
        p = add(name, fn, text)
        p.add_argument("-p")
        p.add_argument("-q", required=True)
        p.add_argument("--signed", action="store_true", help="alternating signs by block position")

    p = add("jacobi", cmd_jacobi, "Jacobi defect of three partitions")
    p.add_argument("-p")
    p.add_argument("-q", required=True)
    p.add_argument("-s", required=True)
    p.add_argument("--signed", action="store_true")

    graph = sub.add_parser("graph", help="graph operations").add_subparsers(dest="graph_command", required=True)
    for name, fn, text in (("subgraph", cmd_graph_subgraph, "subgraph spanned by selected vertices"),
                           ("quotient", cmd_graph_quotient, "contract the selected subgraph")):
        p = add(name, fn, text, graph)
        p.add_argument("-g", help="graph JSON")
        p.add_argument("--select", required=True, help="selected (first-type) vertices as blocks")
        p.add_argument("--second", help="selected second-type vertices (admissible graphs)")
    p = add("insert", cmd_graph_insert, "insert a graph at a vertex", graph)
    p.add_argument("-g")
    p.add_argument("--guest", required=True)
    p.add_argument("--site", type=int, required=True)
    p.add_argument("--iota", required=True)
    p.add_argument("--mode", choices=("paired", "trivial"), default="trivial")
    p.add_argument("--site2", type=int)
    p.add_argument("--kappa")
    p = add("bracket", cmd_graph_bracket, "lifted Lie bracket of two graphs", graph)
    p.add_argument("-g")
    p.add_argument("--guest", required=True)
    p = add("dot", cmd_graph_dot, "render a graph as DOT", graph)
    p.add_argument("-g")

    p = add("check", cmd_check, "run an identity suite")
    p.add_argument("suite", help=f"all, {', '.join(suites.SUITES)}")
    p.add_argument("--max-atoms", type=int, default=suites.DEFAULT_MAX_ATOMS)
    p.add_argument("--samples", type=int, default=suites.DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--timing", action="store_true", help="include elapsed seconds (not byte-stable)")
    return parser


def _render(result, fmt: str) -> str:
    if isinstance(result, str):
        return result
    if fmt == "dot":
        if isinstance(result, (FeynmanDiagram, AdmissibleGraph)):
            return export_dot(result)
        raise UsageError("--format dot needs a graph result")
    return dumps(result) + "\n"


def _error_json(exc: Exception) -> dict:
    body = {"error": getattr(exc, "code", type(exc).__name__), "message": str(exc)}
    if isinstance(exc, ValidationError):
        body["violations"] = exc.violations
    if isinstance(exc, ParseError):
        body["line"], body["column"] = exc.line, exc.column
    return body


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.fn(args)
        code = 0
        if isinstance(result, _SuiteOutput):
            code = 0 if result.passed else 3
            result = result.body
        text = _render(result, args.format)
        if args.outfile:
            with open(args.outfile, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return code
    except PartcalcError as exc:
        sys.stderr.write(json.dumps(_error_json(exc), sort_keys=True) + "\n")
        return 2
    except (OSError, KeyError) as exc:
        sys.stderr.write(json.dumps(_error_json(exc), sort_keys=True) + "\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
