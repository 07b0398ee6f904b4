"""Insertion composition, the pre-Lie decomposition and the Lie bracket.

``compose(P, Q)`` sums every nontrivial insertion of ``Q`` into a block of
``P``.  Composition extends bilinearly to :class:`LinComb` operands, which is
what the pre-Lie identity and the Jacobi identity are stated on.
"""

from __future__ import annotations

from typing import Iterator

from .combinatorics import all_maps
from .errors import EmptyGuest, EmptyOperand, RangesNotDisjoint
from .linear import LinComb, bilinear
from .partition import InsertionMap, OrderedPartition, Partition, insert


def _check_disjoint(*parts: Partition) -> None:
    seen: set = set()
    for p in parts:
        if seen & p.range:
            raise RangesNotDisjoint("operand ranges overlap")
        seen |= p.range


def enumerate_insertions(P: Partition, a: int, Q: Partition) -> Iterator[InsertionMap]:
    """Every total map from block ``a`` of ``P`` into the blocks of ``Q``."""
    _check_disjoint(P, Q)
    if not Q:
        raise EmptyGuest("cannot insert an empty partition")
    host = P.blocks[a]
    for m in all_maps(host, len(Q.blocks)):
        yield InsertionMap(host, m)


def compose_at(P: Partition, a: int, Q: Partition, ordered: bool = False) -> LinComb:
    out = LinComb()
    for iota in enumerate_insertions(P, a, Q):
        out = out + LinComb.single(insert(P, a, Q, iota, ordered=ordered))
    return out


def _require_nonempty(P: Partition, Q: Partition) -> None:
    if not P or not Q:
        raise EmptyOperand("composition needs two nonempty partitions")


def compose(P: Partition, Q: Partition) -> LinComb:
    """Sum of ``compose_at`` over every block of ``P``."""
    _require_nonempty(P, Q)
    _check_disjoint(P, Q)
    out = LinComb()
    for a in range(len(P.blocks)):
        out = out + compose_at(P, a, Q)
    return out


def compose_signed(P: Partition, Q: Partition) -> LinComb:
    """``sum_a (-1)**a compose_at(P, a, Q)`` with ``a`` counted from 1 in stored order.

    Terms are :class:`OrderedPartition` values so the position of every block
    survives for the next composition.
    """
    _require_nonempty(P, Q)
    _check_disjoint(P, Q)
    out = LinComb()
    for a in range(len(P.blocks)):
        sign = -1 if a % 2 == 0 else 1
        out = out + compose_at(P, a, Q, ordered=True) * sign
    return out


def compose_lin(X: LinComb, Y: LinComb, signed: bool = False) -> LinComb:
    return bilinear(compose_signed if signed else compose, X, Y)


def _lin(x) -> LinComb:
    return x if isinstance(x, LinComb) else LinComb.single(x)


def i_part(P: Partition, Q: Partition, S: Partition) -> LinComb:
    """Terms of ``(P o Q) o S`` where ``S`` lands in a block of ``P`` other than the one ``Q`` took."""
    _check_disjoint(P, Q, S)
    out = LinComb()
    n = len(P.blocks)
    for a in range(n):
        for iota in enumerate_insertions(P, a, Q):
            first = insert(P, a, Q, iota)
            for b in range(n):
                if b == a:
                    continue
                b_pos = first.index(P.blocks[b])
                for mu in enumerate_insertions(P, b, S):
                    out = out + LinComb.single(insert(first, b_pos, S, mu.targets))
    return out


def lemma31_pair(P: Partition, a: int, Q: Partition, iota, b: int, S: Partition, mu) -> tuple[Partition, Partition]:
    """Both orders of inserting ``Q`` at block ``a`` and ``S`` at block ``b`` (``a != b``)."""
    first = insert(P, a, Q, iota)
    left = insert(first, first.index(P.blocks[b]), S, mu)
    second = insert(P, b, S, mu)
    right = insert(second, second.index(P.blocks[a]), Q, iota)
    return left, right


def bracket(P, Q) -> LinComb:
    """``P o Q - Q o P``; operands may be partitions or linear combinations."""
    X, Y = _lin(P), _lin(Q)
    return compose_lin(X, Y) - compose_lin(Y, X)


def bracket_signed(P, Q) -> LinComb:
    X, Y = _lin(P), _lin(Q)
    return compose_lin(X, Y, signed=True) - compose_lin(Y, X, signed=True)


def jacobi_defect(P: Partition, Q: Partition, S: Partition) -> LinComb:
    """``[P,[Q,S]] + [Q,[S,P]] + [S,[P,Q]]``; zero for a Lie bracket."""
    _check_disjoint(P, Q, S)
    return bracket(P, bracket(Q, S)) + bracket(Q, bracket(S, P)) + bracket(S, bracket(P, Q))


def jacobi_defect_signed(P: Partition, Q: Partition, S: Partition) -> LinComb:
    _check_disjoint(P, Q, S)
    P, Q, S = (OrderedPartition(x.blocks) for x in (P, Q, S))
    return (bracket_signed(P, bracket_signed(Q, S)) + bracket_signed(Q, bracket_signed(S, P))
            + bracket_signed(S, bracket_signed(P, Q)))


def prelie_sides(P: Partition, Q: Partition, S: Partition) -> tuple[LinComb, LinComb]:
    """``((P o Q) o S, P o (Q o S) + i_part(P, Q, S))``."""
    _check_disjoint(P, Q, S)
    left = compose_lin(compose(P, Q), _lin(S))
    right = compose_lin(_lin(P), compose(Q, S)) + i_part(P, Q, S)
    return left, right


def prelie_decomposition_check(P: Partition, Q: Partition, S: Partition) -> bool:
    left, right = prelie_sides(P, Q, S)
    return left == right
