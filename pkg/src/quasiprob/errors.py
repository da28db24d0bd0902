"""Exception hierarchy.

Domain errors (a well-formed request the theory refuses) derive from
:class:`DomainError`; malformed input derives from :class:`SyntaxProblem`.
The CLI maps the first family to exit status 1 and the second to 2.
"""

from __future__ import annotations


class QuasiProbError(Exception):
    """Base class for every error raised by this package."""


class DomainError(QuasiProbError):
    pass


class SyntaxProblem(QuasiProbError, ValueError):
    pass


class KindMismatch(DomainError, TypeError):
    """A value does not belong to the algebra it was handed to."""


class InvalidValue(DomainError, ValueError):
    """A value violates the representation constraints of its algebra."""


class PreconditionError(DomainError, ValueError):
    """An operation was called outside of its precondition (e.g. ``target << v``)."""


class ImpossibleEvidence(DomainError):
    """Conditioning or revising on an event whose measure is ``n``."""


class AllImpossible(DomainError):
    """Every entry of a raw table is ``n``, so there is nothing to normalize."""


class NotNormalized(DomainError):
    """A table whose total is not ``e`` where a quasi-measure is required."""


class NotBelieved(DomainError):
    """Entrenchment requested for a formula that is not plainly believed."""


class BadShift(DomainError, ValueError):
    """Revision strength is not a strictly positive rank-group element."""


class SpaceMismatch(DomainError, ValueError):
    """An event or formula refers to a different world space."""


class InvalidPartition(DomainError, ValueError):
    pass


class UnknownAtom(DomainError, KeyError):
    def __init__(self, name: str) -> None:
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"unknown atom {self.name!r}"


class ValueSyntaxError(SyntaxProblem):
    pass


class FileFormatError(SyntaxProblem):
    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class FormulaSyntaxError(SyntaxProblem):
    """Raised by the formula parser.

    ``offset`` is a byte offset into the UTF-8 encoding of the input and
    ``expected`` the set of tokens that would have been accepted there.
    """

    def __init__(self, offset: int, expected: frozenset[str], found: str) -> None:
        self.offset = offset
        self.expected = expected
        self.found = found
        exp = ", ".join(sorted(expected))
        super().__init__(f"syntax error at byte {offset}: found {found}, expected one of {exp}")
