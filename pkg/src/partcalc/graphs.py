"""Graphs as partitions of half-edges glued by an involution.

A vertex is a block of half-edges; the structure map ``sigma`` pairs two
half-edges into an internal line or fixes one as an external line.  Three
kinds share this encoding:

* :class:`FeynmanDiagram` -- fixed points allowed (external legs);
* :class:`OrdinaryGraph` -- no fixed points;
* :class:`AdmissibleGraph` -- two vertex types, lines leave first-type
  vertices, no tadpoles, no multiple edges, no edges among second-type
  vertices.

Subgraphs, quotients and insertions are computed on the vertex partition
with :mod:`partcalc.partition` and the structure map is carried along.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    BadSelection,
    Disconnected,
    InvalidGraph,
    KindMismatch,
    RangesNotDisjoint,
    ResultNotAdmissible,
    ValidationError,
)
from .linear import LinComb
from .lie import compose, enumerate_insertions
from .lie import bracket as partition_bracket
from .partition import (
    Partition,
    _UnionFind,
    atom_key,
    insert,
    quotient,
    sorted_atoms,
    trivial_insert,
)


class StructureMap:
    """An involution on a finite carrier; fixed points are external half-edges."""

    __slots__ = ("carrier", "_map", "_key")

    def __init__(self, mapping: Mapping):
        self._map = dict(mapping)
        self.carrier = frozenset(self._map)
        pairs = tuple(sorted((tuple(sorted_atoms((e, f))) for e, f in self._map.items()
                              if atom_key(e) <= atom_key(f)),
                             key=lambda p: (atom_key(p[0]), atom_key(p[1]))))
        self._key = pairs

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence] = (), fixed: Iterable = ()) -> "StructureMap":
        m: dict = {}
        for pair in pairs:
            if len(pair) != 2:
                raise ValidationError("sigma pair must have two half-edges")
            e, f = pair
            if e == f or e in m or f in m:
                raise ValidationError("sigma not an involution")
            m[e], m[f] = f, e
        for e in fixed:
            if e in m:
                raise ValidationError("sigma not an involution")
            m[e] = e
        return cls(m)

    def __call__(self, e):
        return self._map[e]

    def image(self, atoms: Iterable) -> frozenset:
        return frozenset(self._map[e] for e in atoms if e in self._map)

    def is_involution(self) -> bool:
        return all(self._map.get(f) == e for e, f in self._map.items())

    @property
    def fixed_points(self) -> frozenset:
        return frozenset(e for e, f in self._map.items() if e == f)

    @property
    def pairs(self) -> list[tuple]:
        return [p for p in self._key if p[0] != p[1]]

    def restrict(self, atoms: Iterable) -> "StructureMap":
        atoms = frozenset(atoms)
        if any(self._map[e] not in atoms for e in atoms):
            raise InvalidGraph("restriction of sigma is not closed")
        return StructureMap({e: self._map[e] for e in atoms})

    def glue(self, other: "StructureMap") -> "StructureMap":
        if self.carrier & other.carrier:
            raise RangesNotDisjoint("structure maps share half-edges")
        return StructureMap({**self._map, **other._map})

    def items(self):
        return self._map.items()

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureMap):
            return NotImplemented
        return self._map == other._map

    def __hash__(self) -> int:
        return hash(self._key)

    def sort_key(self):
        return tuple((atom_key(a), atom_key(b)) for a, b in self._key)

    def __repr__(self) -> str:
        cyc = "".join(f"({a} {b})" for a, b in self.pairs)
        fixed = ",".join(map(str, sorted_atoms(self.fixed_points)))
        return f"sigma[{cyc or 'id'}; fixed {{{fixed}}}]"


def sigma_from(pairs: Iterable[Sequence] = (), fixed: Iterable = ()) -> StructureMap:
    return StructureMap.from_pairs(pairs, fixed)


@dataclass(frozen=True)
class FeynmanDiagram:
    sigma: StructureMap
    vertices: Partition

    kind = "feynman"

    def __post_init__(self):
        object.__setattr__(self, "vertices", self.vertices.canonicalized())

    @property
    def carrier(self) -> frozenset:
        return self.sigma.carrier

    def all_vertices(self) -> tuple[frozenset, ...]:
        return self.vertices.blocks

    def with_vertices(self, sigma: StructureMap, vertices: Partition):
        return type(self)(sigma, vertices)

    def sort_key(self):
        return (self.kind, self.sigma.sort_key(), self.vertices.sort_key())


@dataclass(frozen=True)
class OrdinaryGraph(FeynmanDiagram):
    kind = "ordinary"


@dataclass(frozen=True)
class AdmissibleGraph:
    sigma: StructureMap
    first_type: Partition
    second_type: Partition

    kind = "admissible"

    def __post_init__(self):
        object.__setattr__(self, "first_type", self.first_type.canonicalized())
        object.__setattr__(self, "second_type", self.second_type.canonicalized())

    @property
    def carrier(self) -> frozenset:
        return self.sigma.carrier

    def all_vertices(self) -> tuple[frozenset, ...]:
        return self.first_type.blocks + self.second_type.blocks

    def sort_key(self):
        return (self.kind, self.sigma.sort_key(), self.first_type.sort_key(),
                self.second_type.sort_key())


Graph = FeynmanDiagram | AdmissibleGraph


def validate(g) -> list[str]:
    """Violated clauses of the graph's kind; empty when the graph is valid."""
    out: list[str] = []
    sigma = g.sigma
    if not sigma.is_involution() or not all(sigma(e) in sigma.carrier for e in sigma.carrier):
        out.append("sigma not an involution")
    if isinstance(g, AdmissibleGraph):
        I, J = g.first_type, g.second_type
        if I.range & J.range:
            out.append("first and second type ranges overlap")
        if I.range | J.range != sigma.carrier:
            out.append("vertex range differs from sigma carrier")
        if sigma.fixed_points:
            out.append("fixed point in admissible graph")
        if out:
            return out
        for Ii in I.blocks:
            if sigma.image(Ii) & Ii:
                out.append("tadpole at first-type vertex")
                break
        if any(sigma.image(Jj) & Jk for Jj in J.blocks for Jk in J.blocks):
            out.append("edge between second-type vertices")
        if any(len(sigma.image(Ii) & Ik) > 1 for Ii in I.blocks for Ik in I.blocks if Ii != Ik):
            out.append("multiple edge between first-type vertices")
        if any(len(sigma.image(Ii) & Jj) > 1 for Ii in I.blocks for Jj in J.blocks):
            out.append("multiple edge from first-type to second-type vertex")
        return out
    if g.vertices.range != sigma.carrier:
        out.append("vertex range differs from sigma carrier")
    if isinstance(g, OrdinaryGraph) and sigma.fixed_points:
        out.append("fixed point in ordinary graph")
    return out


def _require_valid(g) -> None:
    problems = validate(g)
    if problems:
        raise InvalidGraph("; ".join(problems))


def lines(g) -> tuple[frozenset, list[tuple]]:
    """``(external half-edges, internal lines)``.

    Internal lines are sorted pairs; for admissible graphs each is oriented
    ``(start, end)`` with the start in a first-type vertex (the smaller
    half-edge starts when both ends are first-type).
    """
    _require_valid(g)
    sigma = g.sigma
    internal = sigma.pairs
    if isinstance(g, AdmissibleGraph):
        I = g.first_type.range
        internal = [(a, b) if a in I else (b, a) for a, b in internal]
    return sigma.fixed_points, internal


def _components(blocks: Sequence[frozenset], sigma: StructureMap) -> list[list[frozenset]]:
    where = {e: i for i, b in enumerate(blocks) for e in b}
    uf = _UnionFind(len(blocks))
    for e, i in where.items():
        f = sigma(e) if e in sigma.carrier else e
        if f in where:
            uf.union(i, where[f])
    groups: dict[int, list[frozenset]] = {}
    for i, b in enumerate(blocks):
        groups.setdefault(uf.find(i), []).append(b)
    return list(groups.values())


def is_connected(g) -> bool:
    """True iff no proper nonempty set of vertices is closed under sigma."""
    _require_valid(g)
    return len(_components(g.all_vertices(), g.sigma)) <= 1


def _selection(g, selection: Iterable[Iterable], pool: Sequence[frozenset]) -> list[frozenset]:
    chosen = []
    for raw in selection:
        b = frozenset(raw)
        if b not in pool:
            raise BadSelection(f"{list(sorted_atoms(b))} is not a vertex")
        if b in chosen:
            raise BadSelection("vertex selected twice")
        chosen.append(b)
    if not chosen:
        raise BadSelection("empty selection")
    return chosen


def _inner(sigma: StructureMap, J: frozenset) -> frozenset:
    """Half-edges of ``J`` whose partner is also in ``J`` (fixed points included)."""
    return frozenset(e for e in J if sigma(e) in J)


def subgraph(g, selection):
    """The subgraph spanned by a selection of vertices.

    Feynman: severed lines become external legs.  Ordinary: severed
    half-edges are deleted.  Admissible: ``selection = (L, K)`` with ``L``
    first-type and ``K`` second-type vertices, every ``K`` vertex hit from
    ``L``; only lines inside ``L`` or from ``L`` into ``K`` are kept.
    """
    _require_valid(g)
    sigma = g.sigma
    if isinstance(g, AdmissibleGraph):
        L_sel, K_sel = selection
        L = _selection(g, L_sel, g.first_type.blocks)
        K = [] if not K_sel else _selection(g, K_sel, g.second_type.blocks)
        Lr = frozenset().union(*L)
        Kr = frozenset().union(*K)
        hit = sigma.image(Lr)
        if any(not (k & hit) for k in K):
            raise BadSelection("every selected second-type vertex must be hit from L")
        ILK = frozenset(e for e in Lr if sigma(e) in Lr | Kr)
        Lp = Partition(b & ILK for b in L)
        Kp = Partition(k & hit for k in K)
        return AdmissibleGraph(sigma.restrict(Lp.range | Kp.range), Lp, Kp)
    J = _selection(g, selection, g.vertices.blocks)
    Jr = frozenset().union(*J)
    if isinstance(g, OrdinaryGraph):
        Jp = _inner(sigma, Jr)
        return OrdinaryGraph(sigma.restrict(Jp), Partition(b & Jp for b in J))
    inner = _inner(sigma, Jr)
    local = StructureMap({e: (sigma(e) if e in inner else e) for e in Jr})
    return FeynmanDiagram(local, Partition(J))


def contracted_half_edges(g, selection) -> list[frozenset]:
    """The blocks removed by contracting the selection (the primed blocks)."""
    sigma = g.sigma
    if isinstance(g, AdmissibleGraph):
        sub = subgraph(g, selection)
        return list(sub.first_type.blocks)
    J = _selection(g, selection, g.vertices.blocks)
    Jr = frozenset().union(*J)
    keep = _inner(sigma, Jr) - sigma.fixed_points
    return [b & keep for b in J if b & keep]


def quotient_graph(g, selection):
    """Contract a connected subgraph of a connected graph to one vertex."""
    _require_valid(g)
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    sub = subgraph(g, selection)
    if isinstance(g, AdmissibleGraph):
        connected = is_connected(sub)
    else:
        connected = len(selection_components(g, selection)) == 1
    if not connected:
        raise Disconnected("selected subgraph is not connected")
    sigma = g.sigma
    if isinstance(g, AdmissibleGraph):
        Lp, Kp = sub.first_type.range, sub.second_type.range
        first = quotient(g.first_type, Lp).partition
        second = quotient(g.second_type, Kp).partition
        return AdmissibleGraph(sigma.restrict(first.range | second.range), first, second)
    removed = frozenset().union(*contracted_half_edges(g, selection))
    verts = quotient(g.vertices, removed).partition
    return g.with_vertices(sigma.restrict(verts.range), verts)


def selection_components(g, selection) -> list[list[frozenset]]:
    """Split a vertex selection into pieces joined by lines inside the selection."""
    if isinstance(g, AdmissibleGraph):
        raise KindMismatch("component split is only defined for Feynman and ordinary graphs")
    J = _selection(g, selection, g.vertices.blocks)
    Jr = frozenset().union(*J)
    local = StructureMap({e: (g.sigma(e) if g.sigma(e) in Jr else e) for e in Jr})
    return [sorted(c, key=lambda b: atom_key(min(b, key=atom_key)))
            for c in _components(J, local)]


def quotient_disconnected(g, components: Sequence[Iterable[Iterable]]):
    """Contract each connected component in turn (left fold of :func:`quotient_graph`)."""
    comps = [[frozenset(b) for b in c] for c in components]
    flat = [b for c in comps for b in c]
    if len(set(flat)) != len(flat):
        raise BadSelection("components overlap")
    if flat and len(selection_components(g, flat)) != len(comps):
        raise BadSelection("components are not the connected pieces of the selection")
    current = g
    for c in comps:
        current = quotient_graph(current, c)
    return current


def _same_kind(g1, g2) -> None:
    if type(g1) is not type(g2):
        raise KindMismatch(f"cannot combine {g1.kind} with {g2.kind}")


def insert_graph(host, site: int, guest, iota):
    """Insert ``guest`` at vertex ``site`` of ``host``; structure maps are glued."""
    _same_kind(host, guest)
    if isinstance(host, AdmissibleGraph):
        raise KindMismatch("use insert_admissible for admissible graphs")
    delta = host.sigma.glue(guest.sigma)
    return host.with_vertices(delta, insert(host.vertices, site, guest.vertices, iota))


def insert_admissible(host: AdmissibleGraph, guest: AdmissibleGraph, mode: str,
                      a: int, iota, b: int | None = None, kappa=None) -> AdmissibleGraph:
    """Insert first-type into first-type; second-type either paired or appended.

    ``mode`` is ``"paired"`` (needs ``b`` and ``kappa``) or ``"trivial"``.
    """
    _same_kind(host, guest)
    delta = host.sigma.glue(guest.sigma)
    first = insert(host.first_type, a, guest.first_type, iota)
    if mode == "paired":
        if b is None or kappa is None:
            raise BadSelection("paired mode needs a second-type site and map")
        second = insert(host.second_type, b, guest.second_type, kappa)
    elif mode == "trivial":
        second = trivial_insert(host.second_type, guest.second_type)
    else:
        raise BadSelection(f"unknown insertion mode {mode!r}")
    out = AdmissibleGraph(delta, first, second)
    problems = validate(out)
    if problems:
        raise ResultNotAdmissible("; ".join(problems))
    return out


class GraphLinComb:
    """A linear combination of graphs sharing one structure map."""

    def __init__(self, kind: type, sigma: StructureMap, terms: LinComb):
        self.kind = kind
        self.sigma = sigma
        self.terms = terms

    def graphs(self) -> list[tuple]:
        return [(self.kind(self.sigma, p), c) for p, c in self.terms.sorted_items()]

    def __add__(self, other: "GraphLinComb") -> "GraphLinComb":
        if other.sigma != self.sigma or other.kind is not self.kind:
            raise KindMismatch("graph sums need a common structure map")
        return GraphLinComb(self.kind, self.sigma, self.terms + other.terms)

    def __neg__(self) -> "GraphLinComb":
        return GraphLinComb(self.kind, self.sigma, -self.terms)

    def __sub__(self, other: "GraphLinComb") -> "GraphLinComb":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GraphLinComb):
            return NotImplemented
        return self.kind is other.kind and self.sigma == other.sigma and self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"GraphLinComb({self.sigma!r}, {self.terms!r})"


def compose_graphs(g1, g2) -> GraphLinComb:
    """All insertions of ``g2`` into vertices of ``g1``, assembled graph by graph."""
    _same_kind(g1, g2)
    if isinstance(g1, AdmissibleGraph):
        raise KindMismatch("composition is lifted for Feynman and ordinary graphs only")
    delta = g1.sigma.glue(g2.sigma)
    out = LinComb()
    for a in range(len(g1.vertices)):
        for iota in enumerate_insertions(g1.vertices, a, g2.vertices):
            h = insert_graph(g1, a, g2, iota)
            assert h.sigma == delta
            out = out + LinComb.single(h.vertices)
    return GraphLinComb(type(g1), delta, out)


def bracket_graphs(g1, g2, check: bool = True) -> GraphLinComb:
    """Lie bracket lifted to graphs; optionally checked against the partition bracket."""
    _same_kind(g1, g2)
    left = compose_graphs(g1, g2)
    right = compose_graphs(g2, g1)
    result = GraphLinComb(left.kind, left.sigma, left.terms - right.terms)
    if check:
        expected = partition_bracket(g1.vertices, g2.vertices)
        if result.terms != expected:
            raise AssertionError("lifted bracket disagrees with the partition bracket")
    return result


def partition_compose_lift(g1, g2) -> GraphLinComb:
    """The same sum as :func:`compose_graphs`, computed on vertex partitions."""
    return GraphLinComb(type(g1), g1.sigma.glue(g2.sigma), compose(g1.vertices, g2.vertices))


def involutions(carrier: Sequence, fixed_point_free: bool = False) -> Iterator[StructureMap]:
    """Every involution on ``carrier``."""
    atoms = list(sorted_atoms(carrier))

    def rec(rest: list) -> Iterator[dict]:
        if not rest:
            yield {}
            return
        e, tail = rest[0], rest[1:]
        if not fixed_point_free:
            for m in rec(tail):
                yield {e: e, **m}
        for i, f in enumerate(tail):
            for m in rec(tail[:i] + tail[i + 1:]):
                yield {e: f, f: e, **m}

    for m in rec(atoms):
        yield StructureMap(m)


def vertex_subsets(blocks: Sequence[frozenset], min_size: int = 1) -> Iterator[list[frozenset]]:
    for k in range(min_size, len(blocks) + 1):
        for combo in combinations(blocks, k):
            yield list(combo)
