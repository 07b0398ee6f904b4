"""Partial set partitions and their set-level calculus.

A :class:`Partition` is a finite family of pairwise-disjoint, nonempty blocks of
atoms.  It need not cover any ambient set; its *range* is the union of its
blocks.  Blocks are stored in the order they were given (that order only matters
for signed composition) and compared through a canonical form, so two partitions
are equal whenever they have the same blocks.

Everything here is a pure function on immutable values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import (
    AtomNotInRange,
    BadIndex,
    IncompleteInsertionMap,
    NotAdmissible,
    NotAdmissibleToTuple,
    NotAQuotientShape,
    NotARestriction,
    RangesNotDisjoint,
    TrivialQuotient,
    ValidationError,
)

Atom = Hashable
Block = frozenset

_DIGITS = re.compile(r"(\d+)")


def atom_key(atom):
    """Total order on atoms: integers numerically, strings in natural order."""
    if isinstance(atom, bool):
        return (2, str(atom))
    if isinstance(atom, int):
        return (0, atom)
    if isinstance(atom, str):
        return (1, tuple((0, int(c), "") if c.isdigit() else (1, 0, c)
                         for c in _DIGITS.split(atom) if c))
    return (3, repr(atom))


def sorted_atoms(atoms: Iterable[Atom]) -> tuple:
    return tuple(sorted(atoms, key=atom_key))


class Partition:
    """A family of pairwise-disjoint nonempty blocks.

    Empty blocks are dropped on construction; the partition with no blocks is
    the unit.  ``blocks`` keeps the given order, ``canonical`` is sorted.
    """

    __slots__ = ("blocks", "_canon", "_hash", "_range")

    def __init__(self, blocks: Iterable[Iterable[Atom]] = ()):
        stored = []
        seen: set = set()
        for raw in blocks:
            b = frozenset(raw)
            if not b:
                continue
            if seen & b:
                raise ValidationError("blocks not disjoint")
            seen |= b
            stored.append(b)
        self.blocks: tuple[frozenset, ...] = tuple(stored)
        self._range = frozenset(seen)
        self._canon = tuple(sorted((sorted_atoms(b) for b in stored),
                                   key=lambda t: atom_key(t[0])))
        self._hash = hash(self._canon)

    @property
    def range(self) -> frozenset:
        return self._range

    @property
    def canonical(self) -> tuple[tuple, ...]:
        return self._canon

    def canonicalized(self) -> "Partition":
        return Partition(self._canon)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[frozenset]:
        return iter(self.blocks)

    def __bool__(self) -> bool:
        return bool(self.blocks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._canon == other._canon

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self):
        return tuple(tuple(atom_key(a) for a in b) for b in self._canon)

    def index(self, block: Iterable[Atom]) -> int:
        b = frozenset(block)
        try:
            return self.blocks.index(b)
        except ValueError:
            raise BadIndex(f"block {sorted_atoms(b)} not in partition") from None

    def block_of(self, atom: Atom) -> frozenset:
        for b in self.blocks:
            if atom in b:
                return b
        raise AtomNotInRange(f"atom {atom!r} not in range")

    def to_lists(self, canonical: bool = True) -> list[list]:
        if canonical:
            return [list(b) for b in self._canon]
        return [list(sorted_atoms(b)) for b in self.blocks]

    def __repr__(self) -> str:
        inner = ", ".join("{" + ",".join(map(str, b)) + "}" for b in self._canon)
        return f"Partition({{{inner}}})"


class OrderedPartition(Partition):
    """A partition whose equality respects the stored block order.

    Used for the signed composition, where the position of a block decides
    the sign of an insertion there.
    """

    __slots__ = ()

    def __init__(self, blocks: Iterable[Iterable[Atom]] = ()):
        super().__init__(blocks)
        self._hash = hash(("ordered", self._ordered()))

    def _ordered(self):
        return tuple(sorted_atoms(b) for b in self.blocks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrderedPartition):
            return NotImplemented
        return self._ordered() == other._ordered()

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self):
        return tuple(tuple(atom_key(a) for a in b) for b in self._ordered())

    def __repr__(self) -> str:
        inner = ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.to_lists(False))
        return f"OrderedPartition([{inner}])"


EMPTY = Partition()


def as_block(atoms: Iterable[Atom]) -> frozenset:
    return atoms if isinstance(atoms, frozenset) else frozenset(atoms)


def reversion(family: Iterable[Iterable[Atom]]) -> frozenset:
    """Union of all blocks of ``family``."""
    if isinstance(family, Partition):
        return family.range
    out: set = set()
    for b in family:
        out.update(b)
    return frozenset(out)


def _require_in_range(P: Partition, B: frozenset) -> None:
    missing = B - P.range
    if missing:
        raise AtomNotInRange(f"atoms {list(sorted_atoms(missing))} not in range of partition")


def restrict(P: Partition, B: Iterable[Atom]) -> Partition:
    """Nonempty traces of the blocks of ``P`` on ``B``."""
    B = as_block(B)
    _require_in_range(P, B)
    return Partition(b & B for b in P.blocks).canonicalized()


def touched_range(P: Partition, B: Iterable[Atom]) -> frozenset:
    """Union of the blocks of ``P`` that meet ``B``."""
    B = as_block(B)
    _require_in_range(P, B)
    return reversion(b for b in P.blocks if b & B)


@dataclass(frozen=True)
class QuotientResult:
    partition: Partition
    ideal_part: frozenset
    trivial: bool


def quotient(P: Partition, B: Iterable[Atom]) -> QuotientResult:
    """Divide ``P`` by its restriction to ``B``.

    Blocks missing ``B`` survive; the blocks meeting ``B`` are merged and ``B``
    is cut out of the merge, leaving the ideal block.  When nothing is left
    over the quotient is trivial and no ideal block is added.
    """
    B = as_block(B)
    _require_in_range(P, B)
    kept = [b for b in P.blocks if not b & B]
    ideal = reversion(b for b in P.blocks if b & B) - B
    part = Partition(kept + [ideal]).canonicalized()
    return QuotientResult(part, ideal, not ideal)


def iterated_quotient(P: Partition, family: Iterable[Iterable[Atom]]) -> Partition:
    """Left fold of :func:`quotient` over the blocks of ``family`` in order."""
    current = P
    for J in family:
        current = quotient(current, J).partition
    return current


def is_subpartition(F: Partition, P: Partition) -> bool:
    """True iff every block of ``F`` sits inside some block of ``P``."""
    return all(any(f <= b for b in P.blocks) for f in F.blocks)


def _touched(P: Partition, family: Sequence[frozenset]) -> list[frozenset]:
    _require_in_range(P, reversion(family))
    return [reversion(b for b in P.blocks if b & J) for J in family]


def is_admissible(P: Partition, F: Iterable[Iterable[Atom]]) -> bool:
    """True iff the blocks of ``F`` touch pairwise disjoint parts of ``P``."""
    family = [as_block(J) for J in F]
    touched = _touched(P, family)
    return all(not (r & s) for r, s in combinations(touched, 2))


def is_admissible_weak(P: Partition, F: Iterable[Iterable[Atom]]) -> bool:
    """The equivalent form: no block touched by ``J`` contains another ``J'``."""
    family = [as_block(J) for J in F]
    touched = _touched(P, family)
    return all(not (touched[i] & family[j])
               for i in range(len(family)) for j in range(len(family)) if i != j)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def adjust(P: Partition, F: Iterable[Iterable[Atom]]) -> Partition:
    """Coarsen ``F`` into an admissible family with the same iterated quotient.

    Blocks whose touched ranges intersect are merged, transitively.
    """
    family = [as_block(J) for J in F if J]
    touched = _touched(P, family)
    uf = _UnionFind(len(family))
    for i, j in combinations(range(len(family)), 2):
        if touched[i] & touched[j]:
            uf.union(i, j)
    groups: dict[int, set] = {}
    for i, J in enumerate(family):
        groups.setdefault(uf.find(i), set()).update(J)
    return Partition(groups.values()).canonicalized()


@dataclass(frozen=True)
class InsertionMap:
    """A total map from the removed block onto block indices of the guest."""

    source: frozenset
    targets: Mapping = field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "source", frozenset(self.source))
        object.__setattr__(self, "targets", dict(self.targets))

    @classmethod
    def of(cls, targets: Mapping) -> "InsertionMap":
        return cls(frozenset(targets), targets)

    def fiber(self, index: int) -> frozenset:
        return frozenset(x for x, t in self.targets.items() if t == index)

    def key(self):
        return tuple(sorted(((atom_key(x), t) for x, t in self.targets.items())))

    def __eq__(self, other) -> bool:
        if not isinstance(other, InsertionMap):
            return NotImplemented
        return self.source == other.source and self.targets == other.targets

    def __hash__(self) -> int:
        return hash((self.source, frozenset(self.targets.items())))


def _targets(iota) -> dict:
    return dict(iota.targets) if isinstance(iota, InsertionMap) else dict(iota)


def insert(P: Partition, a: int, Q: Partition, iota, ordered: bool = False) -> Partition:
    """Replace block ``a`` of ``P`` by the blocks of ``Q`` grown by the fibres of ``iota``.

    The guest blocks take the host block's position, in ``Q``'s stored order.
    """
    if P.range & Q.range:
        raise RangesNotDisjoint("host and guest ranges overlap")
    if not 0 <= a < len(P.blocks):
        raise BadIndex(f"host has no block {a}")
    host = P.blocks[a]
    targets = _targets(iota)
    if set(targets) != set(host):
        raise IncompleteInsertionMap("insertion map must be defined exactly on the host block")
    n = len(Q.blocks)
    if n == 0 or any(not isinstance(t, int) or not 0 <= t < n for t in targets.values()):
        raise BadIndex("insertion map targets a missing guest block")
    grown = [Q.blocks[j] | frozenset(x for x, t in targets.items() if t == j) for j in range(n)]
    blocks = list(P.blocks[:a]) + grown + list(P.blocks[a + 1:])
    return OrderedPartition(blocks) if ordered else Partition(blocks)


def trivial_insert(P: Partition, Q: Partition) -> Partition:
    """Insertion at the empty block: the disjoint union of the two families."""
    if P.range & Q.range:
        raise RangesNotDisjoint("host and guest ranges overlap")
    return Partition(P.blocks + Q.blocks)


def canonical_insertion_data(P: Partition, B: Iterable[Atom]) -> dict:
    """For each atom of the ideal block, the trace on ``B`` of its original block."""
    B = as_block(B)
    _require_in_range(P, B)
    return {x: b & B for b in P.blocks if b & B for x in b - B}


def canonical_reinsert(Pq: Partition, Pb: Partition, B: Iterable[Atom],
                       ideal: Iterable[Atom], origin: Mapping | None = None) -> Partition:
    """Undo ``quotient``: insert ``Pb`` back at the ideal block of ``Pq``.

    ``origin`` sends each ideal atom to the block of ``Pb`` it used to share a
    block with (see :func:`canonical_insertion_data`); it is only needed when
    the ideal block is nonempty.
    """
    B = as_block(B)
    ideal = as_block(ideal)
    if Pb.range != B:
        raise NotAQuotientShape("restriction does not cover B")
    if not ideal:
        return trivial_insert(Pq, Pb).canonicalized()
    if ideal not in Pq.blocks:
        raise NotAQuotientShape("ideal block absent from quotient")
    if origin is None or set(origin) != set(ideal):
        raise IncompleteInsertionMap("origin must cover the ideal block")
    a = Pq.index(ideal)
    iota = {x: Pb.index(origin[x]) for x in ideal}
    return insert(Pq, a, Pb, iota).canonicalized()


def factor_quotient(K: Partition, J: Partition) -> tuple[Partition, int, InsertionMap]:
    """Recover ``(I, a, iota)`` with ``insert(I, a, J, iota) == K``."""
    JR = J.range
    if not JR <= K.range or restrict(K, JR) != J:
        raise NotARestriction("J is not the restriction of K to its range")
    q = quotient(K, JR)
    if q.trivial:
        raise TrivialQuotient("touched range equals the range of J")
    I = q.partition
    a = I.index(q.ideal_part)
    targets = {}
    for k in K.blocks:
        trace = k & JR
        if trace:
            j = J.index(trace)
            for x in k - JR:
                targets[x] = j
    return I, a, InsertionMap(q.ideal_part, targets)


def merge_witness(P: Partition, J: Iterable[Iterable[Atom]], K: Iterable[Iterable[Atom]]) -> Partition:
    """A single admissible family ``M`` with ``(P / J) / K == P / M``.

    Each block of ``K`` absorbs the blocks of ``J`` whose touched range it
    meets; blocks of ``J`` that no block of ``K`` reaches are kept as they are.
    """
    J = [as_block(b) for b in J]
    K = [as_block(b) for b in K]
    if not is_admissible(P, J):
        raise NotAdmissible("J is not admissible to P")
    PJ = iterated_quotient(P, J)
    if not is_admissible(PJ, K):
        raise NotAdmissible("K is not admissible to P / J")
    touched_J = [touched_range(P, b) for b in J]
    used: set[int] = set()
    merged = []
    for k in K:
        absorbed = [j for j, r in enumerate(touched_J) if r & k]
        used.update(absorbed)
        merged.append(k.union(*(J[j] for j in absorbed)))
    merged.extend(J[j] for j in range(len(J)) if j not in used)
    return Partition(merged).canonicalized()


class PartitionTuple:
    """A sequence of partitions with pairwise disjoint ranges.

    Components with no blocks are dropped and the rest are ordered by their
    smallest atom, so equality ignores the order they were given in.
    """

    __slots__ = ("parts", "_canon", "_hash", "_range")

    def __init__(self, parts: Iterable[Partition] = ()):
        kept = []
        seen: set = set()
        for p in parts:
            if not isinstance(p, Partition):
                p = Partition(p)
            if not p:
                continue
            if seen & p.range:
                raise ValidationError("tuple components not disjoint")
            seen |= p.range
            kept.append(p.canonicalized())
        kept.sort(key=lambda p: atom_key(p.canonical[0][0]))
        self.parts: tuple[Partition, ...] = tuple(kept)
        self._range = frozenset(seen)
        self._canon = tuple(p.canonical for p in kept)
        self._hash = hash(("tuple", self._canon))

    @classmethod
    def of(cls, x) -> "PartitionTuple":
        if isinstance(x, PartitionTuple):
            return x
        if isinstance(x, Partition):
            return cls([x])
        return cls(x)

    @property
    def range(self) -> frozenset:
        return self._range

    @property
    def canonical(self):
        return self._canon

    def union(self) -> Partition:
        return Partition(b for p in self.parts for b in p.blocks).canonicalized()

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartitionTuple):
            return NotImplemented
        return self._canon == other._canon

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self):
        return tuple(tuple(tuple(atom_key(a) for a in b) for b in c) for c in self._canon)

    def to_lists(self) -> list:
        return [[list(b) for b in c] for c in self._canon]

    def __repr__(self) -> str:
        comps = []
        for c in self._canon:
            comps.append("{" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in c) + "}")
        return "(" + ", ".join(comps) + ")"


UNIT = PartitionTuple()


def _split_by_component(T: PartitionTuple, F: Partition) -> list[list[frozenset]]:
    groups: list[list[frozenset]] = [[] for _ in T.parts]
    for J in F.blocks:
        for lam, part in enumerate(T.parts):
            if J <= part.range:
                groups[lam].append(J)
                break
        else:
            raise NotAdmissibleToTuple(f"block {sorted_atoms(J)} straddles tuple components")
    return groups


def is_admissible_to_tuple(F: Partition, T: PartitionTuple) -> bool:
    try:
        groups = _split_by_component(T, F)
    except NotAdmissibleToTuple:
        return False
    return all(is_admissible(part, g) for part, g in zip(T.parts, groups))


def tuple_quotient(T: PartitionTuple, F: Partition) -> PartitionTuple:
    """Componentwise iterated quotient; each part only sees the blocks inside it."""
    groups = _split_by_component(T, F)
    out = []
    for part, g in zip(T.parts, groups):
        if not is_admissible(part, g):
            raise NotAdmissibleToTuple("family not admissible to a component")
        out.append(iterated_quotient(part, g))
    return PartitionTuple(out)


def quotient_by(P: Partition, X: Partition) -> Partition:
    """``P`` divided by a partition ``X`` that must be its restriction to ``R(X)``."""
    if not X.range <= P.range or restrict(P, X.range) != X:
        raise NotARestriction("divisor is not a restriction of the dividend")
    return quotient(P, X.range).partition
