"""Finite formal sums with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator, Mapping


def _sort_key(term):
    key = getattr(term, "sort_key", None)
    if key is not None:
        return (0, key())
    if isinstance(term, tuple):
        return (1, tuple(_sort_key(t) for t in term))
    return (2, repr(term))


class LinComb:
    """A map from canonical terms to nonzero :class:`~fractions.Fraction` coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable | None = None):
        self._terms: dict = {}
        if terms is None:
            return
        items = terms.items() if isinstance(terms, Mapping) else terms
        for t, c in items:
            self._add(t, c)

    @classmethod
    def single(cls, term, coeff=1) -> "LinComb":
        return cls([(term, coeff)])

    def _add(self, term, coeff) -> None:
        c = self._terms.get(term, 0) + Fraction(coeff)
        if c:
            self._terms[term] = c
        else:
            self._terms.pop(term, None)

    def items(self):
        return self._terms.items()

    def terms(self):
        return self._terms.keys()

    def coeff(self, term) -> Fraction:
        return self._terms.get(term, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other: "LinComb") -> "LinComb":
        out = LinComb(self._terms)
        for t, c in other.items():
            out._add(t, c)
        return out

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + other * -1

    def __neg__(self) -> "LinComb":
        return self * -1

    def __mul__(self, scalar) -> "LinComb":
        s = Fraction(scalar)
        if not s:
            return LinComb()
        return LinComb((t, c * s) for t, c in self._terms.items())

    __rmul__ = __mul__

    def map(self, fn: Callable) -> "LinComb":
        """Apply a linear map given on basis terms (``fn(term) -> LinComb``)."""
        out = LinComb()
        for t, c in self._terms.items():
            for u, d in fn(t).items():
                out._add(u, c * d)
        return out

    def mass(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    def sorted_items(self) -> list[tuple[Hashable, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0]))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for t, c in self.sorted_items():
            parts.append(f"{c}*{t!r}" if c != 1 else repr(t))
        return " + ".join(parts)


def bilinear(fn: Callable, x: LinComb, y: LinComb) -> LinComb:
    """Extend ``fn(term, term) -> LinComb`` bilinearly."""
    out = LinComb()
    for s, a in x.items():
        for t, b in y.items():
            for u, d in fn(s, t).items():
                out._add(u, a * b * d)
    return out
