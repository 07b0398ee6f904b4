"""Coproduct on the span of partitions and partition tuples.

Tensor terms are plain Python tuples of :class:`PartitionTuple`; a partition
in a tensor slot is always embedded as a length-one tuple and the unit is the
empty tuple.

Sum-index convention
--------------------
The non-boundary part of the coproduct of ``P`` runs over nonempty admissible
families in which *every* block has a nontrivial quotient, i.e. its touched
range is strictly larger than the block itself.  Families containing a block
that is a union of whole blocks of ``P`` lose information in the quotient (the
ideal part vanishes) and break coassociativity, so they are left out.  On a
tuple each component independently contributes nothing, its whole range as a
single block, or such a family; the two extreme choices are the boundary
terms.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .combinatorics import families_within
from .linear import LinComb
from .partition import (
    UNIT,
    Partition,
    PartitionTuple,
    is_admissible,
    iterated_quotient,
    restrict,
    touched_range,
    tuple_quotient,
)


def _nontrivial(P: Partition, F: Partition) -> bool:
    return all(touched_range(P, J) != J for J in F.blocks)


def enumerate_admissible_families(P: Partition) -> list[Partition]:
    """Index set of the non-boundary sum of :func:`coproduct`, in a fixed order."""
    out = []
    for F in families_within(P.range):
        if is_admissible(P, F.blocks) and _nontrivial(P, F):
            out.append(F)
    return out


def _restrictions(P: Partition, F: Partition) -> PartitionTuple:
    return PartitionTuple(restrict(P, J) for J in F.blocks)


def coproduct(P: Partition) -> LinComb:
    T = PartitionTuple.of(P)
    out = LinComb.single((UNIT, T))
    if not P:
        return out
    out = out + LinComb.single((T, UNIT))
    terms = [((_restrictions(P, F), PartitionTuple.of(iterated_quotient(P, F.blocks))), 1)
             for F in enumerate_admissible_families(P)]
    return out + LinComb(terms)


def tuple_families(T: PartitionTuple) -> Iterator[Partition]:
    """Families ``F`` admissible to ``T`` under the componentwise convention.

    Includes the empty family and the all-full family (the boundary terms).
    """
    choices = []
    for part in T.parts:
        options = [(), (part.range,)]
        options.extend(tuple(F.blocks) for F in enumerate_admissible_families(part))
        choices.append(options)
    for pick in product(*choices):
        yield Partition(b for blocks in pick for b in blocks)


def coproduct_tuple(T: PartitionTuple) -> LinComb:
    T = PartitionTuple.of(T)
    if len(T) == 1:
        return coproduct(T.parts[0])
    union = T.union()
    out = LinComb()
    for F in tuple_families(T):
        left = PartitionTuple(restrict(union, J) for J in F.blocks)
        out = out + LinComb.single((left, tuple_quotient(T, F)))
    return out


def _delta(x) -> LinComb:
    if isinstance(x, Partition):
        return coproduct(x)
    return coproduct_tuple(x)


def reduced_coproduct(x) -> LinComb:
    """Coproduct minus its two boundary terms; zero on the unit."""
    T = PartitionTuple.of(x)
    if not T:
        return LinComb()
    return _delta(T) - LinComb([((T, UNIT), 1), ((UNIT, T), 1)])


def apply_at(x: LinComb, slot: int, fn) -> LinComb:
    """Apply ``fn`` (tuple -> LinComb of tensors) to tensor factor ``slot`` of every term."""
    out = LinComb()
    for term, c in x.items():
        for piece, d in fn(term[slot]).items():
            out = out + LinComb.single(term[:slot] + piece + term[slot + 1:], c * d)
    return out


def coassociativity_sides(P: Partition) -> tuple[LinComb, LinComb]:
    """``((Delta x id) Delta P, (id x Delta) Delta P)`` as sums of triples."""
    D = coproduct(P)
    return apply_at(D, 0, coproduct_tuple), apply_at(D, 1, coproduct_tuple)


def check_coassociativity(P: Partition) -> bool:
    left, right = coassociativity_sides(P)
    return left == right


def iterated_reduced(P: Partition, m: int) -> LinComb:
    """``m``-fold reduced coproduct, re-applied to the leftmost factor each round."""
    x = reduced_coproduct(P)
    for _ in range(m - 1):
        if not x:
            break
        x = apply_at(x, 0, reduced_coproduct)
    return x


def nilpotency_index(P: Partition) -> int:
    """Smallest ``m >= 1`` with the ``m``-fold reduced coproduct equal to zero.

    Every round strictly shrinks the leftmost factor, so at most
    ``max(1, |range|)`` rounds are needed.
    """
    x = reduced_coproduct(P)
    m = 1
    while x:
        x = apply_at(x, 0, reduced_coproduct)
        m += 1
    return m
