"""JSON documents for partitions, tuples, graphs and linear combinations.

Atoms are always strings.  Printing is canonical: sorted blocks, sorted
terms, sorted object keys and compact separators, so that equal values print
byte-identically and ``parse(dump(parse(text))) == parse(text)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import ParseError, ValidationError
from .graphs import AdmissibleGraph, FeynmanDiagram, OrdinaryGraph, StructureMap, validate
from .linear import LinComb
from .partition import OrderedPartition, Partition, PartitionTuple, sorted_atoms

KINDS = ("partition", "tuple", "feynman", "ordinary", "admissible", "lincomb")
GRAPH_KINDS = {"feynman": FeynmanDiagram, "ordinary": OrdinaryGraph, "admissible": AdmissibleGraph}


@dataclass(frozen=True)
class Document:
    kind: str
    payload: Any


def _atom(x) -> str:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ValidationError(f"atom must be a string, got {x!r}")
    return str(x)


def _block(raw) -> list[str]:
    if not isinstance(raw, list):
        raise ValidationError("block must be an array of atoms")
    atoms = [_atom(a) for a in raw]
    if len(set(atoms)) != len(atoms):
        raise ValidationError("repeated atom in block")
    return atoms


def partition_from(raw) -> Partition:
    if not isinstance(raw, list):
        raise ValidationError("partition must be an array of blocks")
    return Partition(_block(b) for b in raw).canonicalized()


def block_from(raw) -> frozenset:
    return frozenset(_block(raw))


def sigma_to(sigma: StructureMap) -> dict:
    return {"sigma": [list(p) for p in sigma.pairs],
            "fixed": list(sorted_atoms(sigma.fixed_points))}


def sigma_from_json(obj: dict) -> StructureMap:
    pairs = obj.get("sigma", [])
    if not isinstance(pairs, list) or not all(isinstance(p, list) for p in pairs):
        raise ValidationError("sigma must be an array of pairs")
    return StructureMap.from_pairs([[_atom(a) for a in p] for p in pairs],
                                   [_atom(a) for a in obj.get("fixed", [])])


def graph_from(obj: dict, kind: str | None = None):
    kind = kind or obj.get("kind") or ("admissible" if "second_type" in obj else "feynman")
    if kind not in GRAPH_KINDS:
        raise ValidationError(f"unknown graph kind {kind!r}")
    sigma = sigma_from_json(obj)
    if kind == "admissible":
        g = AdmissibleGraph(sigma, partition_from(obj.get("vertices", [])),
                            partition_from(obj.get("second_type", [])))
    else:
        g = GRAPH_KINDS[kind](sigma, partition_from(obj.get("vertices", [])))
    problems = validate(g)
    if problems:
        raise ValidationError(problems)
    return g


def graph_to(g) -> dict:
    out = {"kind": g.kind, **sigma_to(g.sigma)}
    if isinstance(g, AdmissibleGraph):
        out["vertices"] = g.first_type.to_lists()
        out["second_type"] = g.second_type.to_lists()
    else:
        out["vertices"] = g.vertices.to_lists()
    return out


def term_to(term):
    if isinstance(term, OrderedPartition):
        return {"ordered": term.to_lists(canonical=False)}
    if isinstance(term, Partition):
        return term.to_lists()
    if isinstance(term, PartitionTuple):
        return {"tuple": term.to_lists()}
    if isinstance(term, tuple):
        return {"tensor": [term_to(t) for t in term]}
    if isinstance(term, (FeynmanDiagram, AdmissibleGraph)):
        return graph_to(term)
    raise TypeError(f"cannot serialize {type(term).__name__}")


def term_from(raw):
    if isinstance(raw, list):
        return partition_from(raw)
    if isinstance(raw, dict):
        if "ordered" in raw:
            return OrderedPartition(_block(b) for b in raw["ordered"])
        if "tuple" in raw:
            return PartitionTuple(partition_from(p) for p in raw["tuple"])
        if "tensor" in raw:
            return tuple(term_from(t) for t in raw["tensor"])
        if "sigma" in raw or "vertices" in raw:
            return graph_from(raw)
    raise ValidationError("unrecognised term")


def coeff_to(c: Fraction) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def coeff_from(raw) -> Fraction:
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise ValidationError(f"bad coefficient {raw!r}")
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"bad coefficient {raw!r}") from None


def lincomb_to(x: LinComb) -> list[dict]:
    return [{"coeff": coeff_to(c), "term": term_to(t)} for t, c in x.sorted_items()]


def lincomb_from(raw) -> LinComb:
    if not isinstance(raw, list):
        raise ValidationError("lincomb terms must be an array")
    out = LinComb()
    for item in raw:
        if not isinstance(item, dict) or "term" not in item:
            raise ValidationError("lincomb entry needs a term")
        out = out + LinComb.single(term_from(item["term"]), coeff_from(item.get("coeff", "1")))
    return out


def to_json(value) -> Any:
    """The canonical JSON value of a library object."""
    if isinstance(value, Document):
        value = value.payload
    if isinstance(value, LinComb):
        return {"kind": "lincomb", "terms": lincomb_to(value)}
    if isinstance(value, PartitionTuple):
        return {"kind": "tuple", "parts": value.to_lists()}
    if isinstance(value, (FeynmanDiagram, AdmissibleGraph)):
        return graph_to(value)
    if isinstance(value, Partition):
        return term_to(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps(value) -> str:
    if not isinstance(value, (dict, list, str)):
        value = to_json(value)
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def document_from(obj) -> Document:
    if isinstance(obj, list):
        return Document("partition", partition_from(obj))
    if not isinstance(obj, dict):
        raise ValidationError("document must be an array or an object")
    kind = obj.get("kind")
    if kind == "partition":
        return Document(kind, partition_from(obj.get("blocks", obj.get("payload", []))))
    if kind == "tuple":
        return Document(kind, PartitionTuple(partition_from(p) for p in obj.get("parts", [])))
    if kind == "lincomb":
        return Document(kind, lincomb_from(obj.get("terms", [])))
    if kind in GRAPH_KINDS or (kind is None and ("sigma" in obj or "vertices" in obj)):
        g = graph_from(obj, kind)
        return Document(g.kind, g)
    raise ValidationError(f"unknown document kind {kind!r}")


def parse(text: str) -> Document:
    """Parse and validate one JSON document."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return document_from(obj)


def parse_value(text: str):
    """Parse a bare JSON value without document interpretation (for blocks, maps)."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
