from __future__ import annotations

from collections import Counter
from itertools import combinations

import pytest

from oracles import P, as_fz, disjoint_families, fz, quotient_oracle, restrict_oracle, touched
from partcalc.coalgebra import (
    apply_at,
    check_coassociativity,
    coassociativity_sides,
    coproduct,
    coproduct_tuple,
    enumerate_admissible_families,
    iterated_reduced,
    nilpotency_index,
    reduced_coproduct,
)
from partcalc.combinatorics import partitions_of
from partcalc.linear import LinComb
from partcalc.partition import EMPTY, UNIT, PartitionTuple


def T(*parts):
    return PartitionTuple(parts)


def coproduct_oracle(p) -> Counter:
    """Non-boundary terms straight from the definition, as (left, right) frozenset shapes."""
    blocks = fz(p.blocks)
    out: Counter = Counter()
    for fam in disjoint_families(p.range):
        if not fam:
            continue
        ranges = [touched(blocks, J) for J in fam]
        if any(r & s for r, s in combinations(ranges, 2)):
            continue
        if any(r == J for r, J in zip(ranges, fam)):
            continue
        left = frozenset(restrict_oracle(blocks, J) for J in fam)
        right = blocks
        for J in fam:
            right = quotient_oracle(right, J)
        out[(left, right)] += 1
    return out


def shape(term):
    left, right = term
    return (frozenset(as_fz(x) for x in left.parts), frozenset().union(*(as_fz(x) for x in right.parts)))


def test_coproduct_of_empty_is_unit_tensor_unit():
    assert coproduct(EMPTY) == LinComb.single((UNIT, UNIT))
    assert reduced_coproduct(EMPTY) == LinComb()


def test_coproduct_single_atom_is_primitive():
    p = P([1])
    assert coproduct(p) == LinComb([((UNIT, T(p)), 1), ((T(p), UNIT), 1)])
    assert not reduced_coproduct(p)


def test_coproduct_of_one_pair_block():
    p = P([1, 2])
    expected = LinComb([
        ((UNIT, T(p)), 1), ((T(p), UNIT), 1),
        ((T(P([1])), T(P([2]))), 1), ((T(P([2])), T(P([1]))), 1),
    ])
    assert coproduct(p) == expected


def test_coproduct_of_two_singletons_has_boundary_terms_only():
    p = P([1], [2])
    assert enumerate_admissible_families(p) == []
    assert coproduct(p) == LinComb([((UNIT, T(p)), 1), ((T(p), UNIT), 1)])


def test_coproduct_of_three_block():
    p = P([1, 2, 3])
    families = enumerate_admissible_families(p)
    assert len(families) == 6  # every nonempty proper subset as a single block
    terms = reduced_coproduct(p)
    assert terms.coeff((T(P([1])), T(P([2, 3])))) == 1
    assert terms.coeff((T(P([1, 2])), T(P([3])))) == 1


def test_tuple_coproduct_example():
    t = T(P([1, 2]), P([3]))
    D = coproduct_tuple(t)
    assert D.coeff((UNIT, t)) == 1
    assert D.coeff((t, UNIT)) == 1
    assert D.coeff((T(P([1]), P([3])), T(P([2])))) == 1
    assert D.coeff((T(P([1])), T(P([2]), P([3])))) == 1
    assert len(D) == 8


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_coproduct_matches_definition(n):
    for p in partitions_of(range(1, n + 1)):
        D = reduced_coproduct(p)
        got = Counter({shape(t): int(c) for t, c in D.items()})
        assert got == coproduct_oracle(p), p


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_coproduct_grading_and_boundary(n):
    for p in partitions_of(range(1, n + 1)):
        D = coproduct(p)
        for (left, right), c in D.items():
            assert len(left.range) + len(right.range) == n
            assert c > 0


def test_coassociativity_two_singletons():
    L, R = coassociativity_sides(P([1], [2]))
    assert L == R
    assert len(L) == 3


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_coassociativity_exhaustive(n):
    for p in partitions_of(range(1, n + 1)):
        assert check_coassociativity(p), p


def test_apply_at_replaces_one_factor():
    x = LinComb.single((T(P([1, 2])), UNIT))
    got = apply_at(x, 0, lambda t: LinComb.single((t, t), 2))
    assert got == LinComb.single((T(P([1, 2])), T(P([1, 2])), UNIT), 2)


@pytest.mark.parametrize("p, m", [
    (P([1]), 1),
    (EMPTY, 1),
    (P([1], [2]), 1),
    (P([1, 2]), 2),
    (P([1, 2, 3]), 3),
])
def test_nilpotency_index_values(p, m):
    assert nilpotency_index(p) == m
    assert not iterated_reduced(p, m)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_nilpotency_bounded_by_atom_count(n):
    for p in partitions_of(range(1, n + 1)):
        m = nilpotency_index(p)
        assert m <= max(1, n)
        assert not iterated_reduced(p, m)
        if m > 1:
            assert iterated_reduced(p, m - 1)
