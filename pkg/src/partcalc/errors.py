"""Exception hierarchy shared by every partcalc module."""

from __future__ import annotations


class PartcalcError(Exception):
    """Base class; ``code`` is the name reported by the CLI."""

    @property
    def code(self) -> str:
        return type(self).__name__


class ValidationError(PartcalcError):
    """An input violates a structural invariant (overlapping blocks, bad sigma, ...)."""

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class AtomNotInRange(PartcalcError):
    pass


class RangesNotDisjoint(PartcalcError):
    pass


class IncompleteInsertionMap(PartcalcError):
    pass


class BadIndex(PartcalcError):
    pass


class NotAQuotientShape(PartcalcError):
    pass


class NotARestriction(PartcalcError):
    pass


class TrivialQuotient(PartcalcError):
    pass


class NotAdmissible(PartcalcError):
    pass


class NotAdmissibleToTuple(PartcalcError):
    pass


class EmptyGuest(PartcalcError):
    pass


class EmptyOperand(PartcalcError):
    pass


class InvalidGraph(PartcalcError):
    pass


class BadSelection(PartcalcError):
    pass


class Disconnected(PartcalcError):
    pass


class KindMismatch(PartcalcError):
    pass


class ResultNotAdmissible(PartcalcError):
    pass


class ParseError(PartcalcError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")
