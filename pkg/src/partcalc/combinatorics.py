"""Enumerators over small finite structures, used by the coproduct and the suites."""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator, Sequence

from .partition import Partition, sorted_atoms


def set_partitions(atoms: Sequence) -> Iterator[list[list]]:
    """All set partitions of ``atoms`` (restricted-growth order)."""
    atoms = list(atoms)
    if not atoms:
        yield []
        return
    first, rest = atoms[0], atoms[1:]
    for smaller in set_partitions(rest):
        yield [[first]] + smaller
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]


def subsets(atoms: Sequence, min_size: int = 0) -> Iterator[tuple]:
    atoms = list(atoms)
    for k in range(min_size, len(atoms) + 1):
        yield from combinations(atoms, k)


def partial_partitions(atoms: Sequence) -> Iterator[Partition]:
    """Every partition whose range is a subset of ``atoms``, empty one included."""
    for s in subsets(sorted_atoms(atoms)):
        for sp in set_partitions(s):
            yield Partition(sp).canonicalized()


def partitions_of(atoms: Sequence) -> Iterator[Partition]:
    """Every partition with range exactly ``atoms``."""
    for sp in set_partitions(sorted_atoms(atoms)):
        yield Partition(sp).canonicalized()


def families_within(atoms: Sequence) -> Iterator[Partition]:
    """Nonempty families of disjoint nonempty blocks inside ``atoms``."""
    for s in subsets(sorted_atoms(atoms), 1):
        for sp in set_partitions(s):
            yield Partition(sp).canonicalized()


def all_maps(domain: Sequence, n: int) -> Iterator[dict]:
    """All ``n ** len(domain)`` maps ``domain -> range(n)``, lexicographic."""
    domain = sorted_atoms(domain)
    for values in product(range(n), repeat=len(domain)):
        yield dict(zip(domain, values))
